"""Classifying sequences stored as OEIS b-files.

b-files list "index value" per line and may start at index 0; normalize()
makes the alignment explicit.
"""

from fixorb import classify, normalize, parse_bfile

text = """# A000225: 2^n - 1
0 0
1 1
2 3
3 7
4 15
5 31
6 63
"""
bf = parse_bfile(text)
print("offset:", bf.offset)
for align in ("first", "index1"):
    seq = normalize(bf, align=align)
    print(f"align={align:7s}", seq, "->", classify(seq).verdict)
