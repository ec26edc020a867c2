"""MST3 public-key encryption over the automorphism group of the Hermitian function field.

Toy and desk-scale parameters only; nothing here is hardened for real use.
"""

from .errors import Mst3Error
from .field import FieldElement, FieldParams, make_field
from .hgroup import GroupElement, S, g_inv, g_mul
from .logsig import LogSignature, LsType, RandomCover, Stage
from .mst3 import Ciphertext, PublicKey, SchemeParams, SecretKey, decrypt, encrypt, keygen
from .presets import PRESETS, preset_params

__all__ = [
    "Ciphertext", "FieldElement", "FieldParams", "GroupElement", "LogSignature", "LsType",
    "Mst3Error", "PRESETS", "PublicKey", "RandomCover", "S", "SchemeParams", "SecretKey",
    "Stage", "decrypt", "encrypt", "g_inv", "g_mul", "keygen", "make_field", "preset_params",
]
__version__ = "0.1.0"
