"""Published generator vectors with their reported distances and enumerators.

Printed enumerators are kept verbatim, including known typesetting errors;
``verify-paper`` recomputes them and reports the differences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .gf2_core import GeneratorVector, parse_vector


@dataclass(frozen=True)
class Instance:
    name: str
    alpha: GeneratorVector
    expected_d: Optional[int] = None
    printed_enumerator: Optional[str] = None
    # name of another instance whose enumerator is reported equal to this one's
    same_enumerator_as: Optional[str] = None


def _v(text: str) -> GeneratorVector:
    return parse_vector(text)


W_C19_1 = (
    "1+133z^8+2052z^10+10108z^12+36575z^14+85595z^16+127680z^18+127680z^20"
    "+85595z^22+36575z^24+10108z^26+2052z^28+133z^30+z^38"
)
W_C19_2 = (
    "1+190z^8+1767z^10+10507z^12+36860z^14+84341z^16+128478z^18+128478z^20"
    "+84341z^22+36860z^24+10507z^26+1767z^28+190z^30+z^38"
)
# printed identically for both length-50 codes
W_C25 = (
    "1+225z^10+1250z^11+3825z^12+11525z^13+28050z^14+64005z^15+147075z^16"
    "+294975z^17+535075z^18+9111100z^19+1409205z^20+1999925z^21+2642200z^22"
    "+3219675z^23+3623325z^24+377243z^25+3621975z^26+3216050z^27+2643475z^28"
    "+2009175z^29+1408010z^30+904475z^31+535400z^32+292725z^33+147525z^34"
    "+68880z^35+27975z^36+9775z^37+3500z^38+1125z^39+375z^40+125z^41"
)
W_C30 = (
    "1+4060z^12+24360z^14+294930z^16+1728400z^18+7758400z^20+26336640z^22"
    "+67403540z^24+129936240z^26+192974265z^28+220819632z^30+192974265z^32"
    "+129936240z^34+67403540z^36+26336640z^38+7758660z^40+1728400z^42"
    "+294930z^44+24360z^46+4060z^48+z^60"
)
W_C15_1 = (
    "1+450z^8+1848z^10+5040z^12+9045z^14+9045z^16+5040z^18+1848z^20+450z^22+z^30"
)

INSTANCES: tuple[Instance, ...] = (
    Instance("alpha17", _v("0,1,1,0,1,0,0,0,1,1,0,0,0,1,0,1,1")),
    Instance("alpha19", _v("0,1,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,1"), 6),
    Instance("alpha19'", _v("0,0,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,1"), 8, W_C19_1),
    Instance("alpha19''", _v("0,1,1,0,1,0,0,0,0,0,1,0,0,0,0,1,0,1,1"), 8, W_C19_2),
    Instance(
        "alpha19'''",
        _v("0,1,1,0,1,0,0,0,0,1,0,0,0,0,0,1,0,1,1"),
        8,
        same_enumerator_as="alpha19''",
    ),
    Instance(
        "alpha19''''",
        _v("0,1,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,0"),
        8,
        same_enumerator_as="alpha19'",
    ),
    Instance("alpha25^1", _v("0,1,1,0,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,0,1,0,1,1")),
    Instance("alpha25^2", _v("0,1,1,0,1,0,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,0,1,1")),
    Instance("alpha25'", _v("0,1,0,0,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,0,1,0,1,1"), 10, W_C25),
    Instance("alpha25''", _v("0,1,1,0,1,0,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,0,0,1"), 10, W_C25),
    Instance(
        "alpha30",
        _v("0,0,1,1,0,0,0,0,1,1,0,1,1,1,1,1,1,1,1,1,0,1,1,0,0,0,0,1,1,0"),
        12,
        W_C30,
    ),
    Instance("alpha15", _v("0,0,1,1,1,0,0,1,1,0,0,1,1,1,0")),
    Instance("alpha15'", _v("0,0,1,1,1,0,0,1,1,0,0,1,1,0,0"), 8, W_C15_1),
)

BY_NAME = {inst.name: inst for inst in INSTANCES}


def get(name: str) -> Instance:
    return BY_NAME[name]
