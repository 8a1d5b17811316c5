__all__ = [
    "BijectionReport",
    "BruteForceCapError",
    "DomainError",
    "Family",
    "FamilySpec",
    "GenPolynomial",
    "Rosette",
    "ShadowDiagram",
    "StructuralError",
    "WordSet",
    "build",
    "gen_P",
    "gen_Tau2",
    "poly_bruteforce",
    "region_codes",
    "resolve",
    "run_suite",
    "state_census",
    "varphi",
    "varphi_inv",
    "verify_bijection",
]

from shadow_states.bijection import BijectionReport, varphi, varphi_inv, verify_bijection
from shadow_states.common import BruteForceCapError, DomainError, StructuralError
from shadow_states.genpoly import GenPolynomial, poly_bruteforce
from shadow_states.knot_families import Family, FamilySpec, build
from shadow_states.rosette import Rosette, region_codes
from shadow_states.shadow_core import ShadowDiagram, resolve, state_census
from shadow_states.state_words import WordSet, gen_P, gen_Tau2
from shadow_states.verification import run_suite
