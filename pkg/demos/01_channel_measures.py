"""Noise measures of the channel zoo.

Every binary-input channel here is summarized by two numbers: the
Bhattacharyya noise parameter CB and the soft bit value SB.  Both are 0 for
a noise-free channel and 1 for a useless one, and any real channel obeys
SB <= CB <= sqrt(SB).  The parameters below are chosen so that every row has
CB close to 0.4294 -- the decodable-CB threshold of the regular (3,6)
ensemble -- which makes visible how differently SB behaves across channel
families of equal CB.
"""

import math

from bpbounds import (Bsc, Bec, BiAwgn, BiLaplace, BiRayleigh, Bnsc,
                      cb_of, sb_of, pe_of)
from bpbounds.channels import UnsupportedChannelError

channels = [
    ("BSC(0.0484)", Bsc(0.0484)),
    ("BEC(0.4294)", Bec(0.4294)),
    ("BiAWGN(0.7690)", BiAwgn(0.7690)),
    ("Laplace(0.5221)", BiLaplace(0.5221)),
    ("Rayleigh(0.6134)", BiRayleigh(0.6134)),
    ("z-channel(p10=0.1844)", Bnsc(0.0, 0.1844)),
]

print(f"{'channel':24s} {'CB':>8s} {'SB':>8s} {'pe':>8s}   SB<=CB<=sqrt(SB)")
for name, ch in channels:
    cb, sb = cb_of(ch), sb_of(ch)
    try:
        pe = f"{pe_of(ch):8.4f}"
    except UnsupportedChannelError:
        pe = "      --"
    ok = sb <= cb <= math.sqrt(sb)
    print(f"{name:24s} {cb:8.4f} {sb:8.4f} {pe}   {ok}")

print()
print("Equal CB does not mean equal SB: the BSC sits at SB = CB^2 (the lower")
print("edge of the feasible band) and the BEC at SB = CB (the upper edge);")
print("the continuous channels fall in between, ordered AWGN < Laplace <")
print("Rayleigh from BSC-like to BEC-like.")
