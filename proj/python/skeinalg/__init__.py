"""Exact Kauffman-bracket and stated-skein calculus."""

from skeinalg._core import (  # noqa: F401
    antipode,
    catalan_dim,
    check_names,
    check_uvkm,
    check_uvkm_stated,
    closure_is_chebyshev,
    coproduct,
    core_loop,
    counit,
    disk_annihilator,
    evaluate_tangle,
    jones_wenzl_idempotent,
    jones_wenzl_terms,
    nf,
    nf_terms,
    quantum_int,
    sphere_slide,
    tau,
    tau_torsion_pair,
    threading,
    verify,
)

__all__ = [
    "antipode", "catalan_dim", "check_names", "check_uvkm",
    "check_uvkm_stated", "closure_is_chebyshev", "coproduct", "core_loop",
    "counit", "disk_annihilator", "evaluate_tangle",
    "jones_wenzl_idempotent", "jones_wenzl_terms", "nf", "nf_terms",
    "quantum_int", "sphere_slide", "tau", "tau_torsion_pair", "threading",
    "verify",
]
