#!/usr/bin/env python3
"""Print Phi_0..Phi_N for a sequence through both inversion routes and check they agree."""

import argparse

from fnomial.fseq import make_sequence
from fnomial.inversion import verify_delta_convolution
from fnomial.polybasis import phi_polynomials, roundtrip_check

p = argparse.ArgumentParser()
p.add_argument("--seq", default="fibonacci")
p.add_argument("-N", type=int, default=8)
args = p.parse_args()

F = make_sequence(args.seq)
oracle = phi_polynomials(F, args.N, "oracle")
direct = phi_polynomials(F, args.N, "direct")
for n, (a, b) in enumerate(zip(oracle, direct)):
    flag = "" if a == b else "   <-- routes disagree"
    print(f"Phi_{n}(x) = {a}{flag}")
print(verify_delta_convolution(F, args.N).summary())
print(roundtrip_check(F, args.N).summary())
