"""Tope graphs and Hamiltonian cycles of simplicial hyperplane arrangements.

Thin wrapper around the compiled extension.  When the package is built with
scikit-build-core the extension lives next to this file; in a plain CMake
build the test harness points TOPECYCLE_EXT_DIR at the build tree.
"""

import os
import sys

_ext_dir = os.environ.get("TOPECYCLE_EXT_DIR")
if _ext_dir and _ext_dir not in sys.path:
    sys.path.insert(0, _ext_dir)

try:
    from _core import *  # noqa: F401,F403  (build-tree layout)
    from _core import __doc__ as _doc
except ImportError:
    from ._core import *  # noqa: F401,F403  (installed wheel layout)
    from ._core import __doc__ as _doc

__doc__ = _doc
__all__ = [
    "Arrangement",
    "TopeGraph",
    "HamiltonCertificate",
    "TopecycleError",
    "generate",
    "parse_arrangement",
    "parse_tope_graph",
    "parse_certificate",
    "build_tope_graph",
    "oracle_enumerate",
    "contract_graph",
    "is_supersolvable",
    "decomposition_chain",
    "supersolvable_cycle",
    "dns_cycle",
    "search_cycle",
    "product_cycle",
    "verify_certificate",
]
