__all__ = [
    "Transformation", "Permutation", "parse_cycles", "format_cycles",
    "PermGroup", "enumerate_group", "Dfa", "StatePartition",
    "ProductDfa", "ProductGroup", "direct_product", "product_group",
    "BooleanFunction", "CompatibleForm", "Gf2kField",
    "read_dfa_file", "write_dfa_file", "parse_dfa_file", "format_dfa_file",
    "Limits", "PrimitiveDfaError",
]

import logging

from .version import __version__  # noqa: W0611

from .automata import Dfa, StatePartition  # noqa: W0601
from .boolean import BooleanFunction, CompatibleForm  # noqa: W0601
from .config import Limits  # noqa: W0601
from .dfa_file import (  # noqa: W0601
    format_dfa_file, parse_dfa_file, read_dfa_file, write_dfa_file,
)
from .errors import PrimitiveDfaError  # noqa: W0601
from .gf2k import Gf2kField  # noqa: W0601
from .groups import PermGroup, enumerate_group  # noqa: W0601
from .perm import (  # noqa: W0601
    Permutation, Transformation, format_cycles, parse_cycles,
)
from .product import (  # noqa: W0601
    ProductDfa, ProductGroup, direct_product, product_group,
)

logging.getLogger(__name__).addHandler(logging.NullHandler())
