"""Word problem solvers, the area oracle and area certificates"""
from acbench.solvers.affine import AffinePair, affine_evaluate
from acbench.solvers.area import (
    AreaCaps,
    AreaResult,
    AreaStarResult,
    area_bfs,
    area_star_bounded,
    certificate_from_path,
    prove,
)
from acbench.solvers.britton import BrittonResult, BrittonState, britton_solve, solve_Bm
from acbench.solvers.certificate import (
    AreaCertificate,
    CertificateStep,
    certify_wn,
    hat_certificate,
)

__all__ = [
    "AffinePair",
    "AreaCaps",
    "AreaCertificate",
    "AreaResult",
    "AreaStarResult",
    "BrittonResult",
    "BrittonState",
    "CertificateStep",
    "affine_evaluate",
    "area_bfs",
    "area_star_bounded",
    "britton_solve",
    "certificate_from_path",
    "certify_wn",
    "hat_certificate",
    "prove",
    "solve_Bm",
]
