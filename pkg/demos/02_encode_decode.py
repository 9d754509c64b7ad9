"""Encode a data word, damage it, and watch both decoders respond."""

from secdaec import BitVector, builtin, decode_daec, decode_secded, encode
from secdaec.verifier import inject

spec = builtin("8-3")
data = BitVector.from_str("101")
cw = encode(spec, data)
print(f"data {data.to_str()} -> codeword {cw.to_str()}")

for flips in ([], [2], [3, 4], [1, 5]):
    received = inject(cw, flips)
    s = decode_secded(spec, received)
    d = decode_daec(spec, received)
    print(f"\nflip {flips or 'nothing'}: received {received.to_str()}  syndrome {d.syndrome.to_str()}")
    print(f"  secded: {s.kind.name:<24} data {s.data.to_str() if s.data else '-'}")
    print(f"  daec:   {d.kind.name:<24} data {d.data.to_str() if d.data else '-'}")

# the last case is the interesting one: flips at d1 and p2 produce the same
# syndrome as an adjacent error on (d2, d3), so the DAEC decoder "fixes" the
# wrong bits while plain SEC-DED merely reports a detected double error.
