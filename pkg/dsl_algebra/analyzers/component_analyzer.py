"""Cached degree components: dmr0, ginert and ds."""
import logging
from typing import Any, Callable, Dict, Optional

from dsl_algebra.algebra.harmonic import dmr0_component
from dsl_algebra.algebra.inertia import ginert_component
from dsl_algebra.algebra.kv_bridge import ds_component
from dsl_algebra.algebra.lie import lyndon_basis
from dsl_algebra.algebra.words import E01, XY, Alphabet
from dsl_algebra.linalg.exact import Subspace
from dsl_algebra.utils.cache import BasisCache
from dsl_algebra.utils.serialization import rational_to_str

logger = logging.getLogger(__name__)

COMPONENT_ALPHABETS: Dict[str, Alphabet] = {"dmr0": E01, "ginert": E01, "ds": XY}


def component(name: str, n: int, cache: Optional[BasisCache] = None) -> Subspace:
    """Subspace ``name`` in degree n, through the cache when one is given."""
    builders: Dict[str, Callable[[int], Subspace]] = {
        "dmr0": dmr0_component,
        "ginert": ginert_component,
        "ds": lambda d: ds_component(d, component("dmr0", d, cache)),
    }
    if name not in builders:
        raise ValueError(f"unknown object {name!r}; expected one of {', '.join(builders)}")
    if n < 2:
        raise ValueError(f"{name} is computed in degrees n >= 2")
    if cache is None:
        return builders[name](n)
    return cache.get_or_compute(name, n, builders[name])


def compute_component(name: str, n: int, cache: Optional[BasisCache] = None) -> Dict[str, Any]:
    """JSON view of a component: dimension, Lyndon words of the ambient basis and the RREF basis."""
    subspace = component(name, n, cache)
    alphabet = COMPONENT_ALPHABETS[name]
    basis = lyndon_basis(alphabet, n)
    logger.info("%s in degree %d: dim %d of %d", name, n, subspace.dim, basis.dim)
    return {
        "object": name,
        "degree": n,
        "dim": subspace.dim,
        "ambient_dim": subspace.ambient_dim,
        "lyndon_words": [alphabet.format_word(w) for w in basis.words],
        "basis": [[rational_to_str(x) for x in v] for v in subspace.basis],
    }
