"""Exact K-theory coefficient arithmetic and degrees of regular maps between spheres."""

from .bilinear import BilinearMap, base_nice, compose_step, swap, verify_nice, verify_normed
from .classify import DegreeStatus, Verdict, classify, classify_range, consistency_audit
from .hurwitz import HRFamily, binom_odd, hr_family, radon_hurwitz
from .ideals import HomogeneousIdeal, ideal_contains, ideal_I, ideal_index, ideal_part, ideal_subset
from .ko_ring import (
    KOElement,
    KRElement,
    KSpElement,
    KUElement,
    ko_group,
    ko_mul,
    parse_element,
    quaternionify,
    realify,
)
from .nice import NiceDerivation, RegularMapSpec, certify_nice, emit_regular_map, realize
from .spheres import bott_order_table, kgroups_product, kr_obstruction, phi, phi_table

__all__ = [
    "BilinearMap", "DegreeStatus", "HRFamily", "HomogeneousIdeal", "KOElement", "KRElement",
    "KSpElement", "KUElement", "NiceDerivation", "RegularMapSpec", "Verdict", "base_nice",
    "binom_odd", "bott_order_table", "certify_nice", "classify", "classify_range",
    "compose_step", "consistency_audit", "emit_regular_map", "hr_family", "ideal_I",
    "ideal_contains", "ideal_index", "ideal_part", "ideal_subset", "kgroups_product",
    "ko_group", "ko_mul", "kr_obstruction", "parse_element", "phi", "phi_table",
    "quaternionify", "radon_hurwitz", "realify", "realize", "swap", "verify_nice",
    "verify_normed",
]
