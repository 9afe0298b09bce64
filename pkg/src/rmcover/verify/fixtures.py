"""The named 6-variable representatives used throughout the checks.

fun1..fun5 represent the cubic-and-above classes with second-order
nonlinearity 16, fun6..fun12 those with 15, and g0 is the classical
extremal function with nl2 = 18 (the covering radius of RM(2,6)).
The ANFs are fixed verbatim; tests pin them against these strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..core import AnfTermSet, TruthTable, from_anf


@dataclass(frozen=True)
class Representative:
    name: str
    anf_text: str

    def anf(self) -> AnfTermSet:
        return AnfTermSet.parse(self.anf_text, n=6)

    def table(self) -> TruthTable:
        return from_anf(self.anf())


_ANFS = {
    "fun1": "126+135+234",
    "fun2": "1234+126+145+235",
    "fun3": "1234+135+146+235+236+245",
    "fun4": "1236+1245+135+145+146+234",
    "fun5": "12345+135+146+235+236+245",
    "fun6": "123456+126+135+234",
    "fun7": "123456+1234+126+145+235+45",
    "fun8": "123456+1234+135+146+235+236+245",
    "fun9": "123456+1236+1245+135+145+146+234+46",
    "fun10": "123456+1234+134+156+234+236+245+34+36+45",
    "fun11": "123456+1236+1245+135+145+146+234+236+245+35+45+46",
    "fun12": "123456+2345+1256+1346+124+125+235+345+126+346",
    "g0": "123+145+246+356+456",
}

REPRESENTATIVES = {name: Representative(name, text) for name, text in _ANFS.items()}

FUN_NAMES = tuple(f"fun{i}" for i in range(1, 13))

EXPECTED_NL2 = {
    **{f"fun{i}": 16 for i in range(1, 6)},
    **{f"fun{i}": 15 for i in range(6, 13)},
    "g0": 18,
}


@lru_cache(maxsize=None)
def fixture_table(name: str) -> TruthTable:
    return REPRESENTATIVES[name].table()
