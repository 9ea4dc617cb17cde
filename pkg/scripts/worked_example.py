#!/usr/bin/env python3
"""Print every intermediate stage of the encoder for a short input."""
import sys
from collections import Counter

from vrle.container import compress, encode_stages, inspect


def show(data: bytes) -> None:
    st = encode_stages(data)
    print(f"input        {data!r}")
    print(f"bwst         {st.transformed!r}")
    print(f"byte map     {bytes(st.byte_map.forward)!r}  (k={st.byte_map.k})")
    print(f"remapped     {st.remapped.hex(' ')}")
    print(f"vertical     {st.vertical}")
    print(f"runs         {st.runs.tolist()}")
    print(f"histogram    {dict(sorted(Counter(st.runs.tolist()).items()))}")
    for sym, (length, code) in sorted(st.table.entries.items()):
        print(f"  code {sym:3d} -> {format(code, f'0{length}b')}")
    print(f"payload      {st.payload}  ({len(st.payload)} bits)")
    blob = compress(data)
    print(f"container    {len(blob)} bytes  {inspect(blob).as_dict()}")


if __name__ == "__main__":
    show(sys.argv[1].encode() if len(sys.argv) > 1 else b"abraca")
