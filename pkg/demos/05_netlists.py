"""Gate-level netlists, checked against the behavioural codec."""

import numpy as np

from secdaec import area, builtin
from secdaec.netlist import (
    census,
    codec_netlist,
    data_outputs,
    decoder_mismatches,
    depth,
    emit_decoder,
    emit_encoder,
    serialize_hdl,
    simulate,
)

spec = builtin("8-3")
enc = emit_encoder(spec)
print(serialize_hdl(enc))
print("encoder(101) ->", simulate(enc, {"d1": 1, "d2": 0, "d3": 1}))

for mode in ("secded", "daec"):
    nl = codec_netlist(spec, mode)
    print(f"\n{mode}: census {census(nl).as_dict()}  model {area(spec, mode).as_dict()}")
    print(f"{mode}: depth  {depth(nl, data_outputs(nl)).as_dict()}")

shared = emit_decoder(spec, "daec", shared=True)
print("\ndecoder alone, sharing pair matchers between neighbouring bits:", census(shared).as_dict())

for name in ("8-3", "14-8"):
    s = builtin(name)
    print(f"{name}: exhaustive netlist vs codec mismatches:",
          decoder_mismatches(s, "daec", np.arange(1 << s.n)))
