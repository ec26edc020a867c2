"""Named parameter sets."""

from .field import make_field
from .mst3 import SchemeParams

# name: (p, n, modulus little-endian, type1, type2)
PRESETS = {
    "paper-3-6": (3, 3, (2, 2, 0, 0, 0, 0, 1), (27, 9, 3), (9, 3)),
    "toy-3": (3, 1, (2, 2, 1), (3, 3), (3,)),
    "toy-5": (5, 1, (2, 4, 1), (5, 5), (5,)),
}


def preset_params(name: str) -> SchemeParams:
    try:
        p, n, modulus, t1, t2 = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
    return SchemeParams.build(make_field(p, n, modulus), t1, t2)
