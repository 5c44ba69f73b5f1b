"""Phase semantics, proof checking and countermodel search for a
non-commutative, non-associative linear logic."""

from .phase import (Fact, QStructure, StructureError, Violation, all_facts, biorth,
                    dot_set, is_fact, is_projective, is_valid_fact, limp, make_fact,
                    neg, one_fact, orth, par, plus, tensor, top_fact, validate, with_,
                    z_fact, zero_fact)
from .models import (classical_model, enumerate_qstructures, random_fact,
                     random_qstructure, ray_model)
from .syntax import (Sequent, eval_formula, fold_pars, fold_tensors, nnf, parse,
                     parse_sequent, right_normalize, sequent_valid, show)
from .kernel import ProofTree, RuleTag, check_proof, check_step, search
from .countermodel import falsify
from .harness import soundness_harness

__all__ = [
    "Fact", "QStructure", "StructureError", "Violation", "all_facts", "biorth",
    "dot_set", "is_fact", "is_projective", "is_valid_fact", "limp", "make_fact",
    "neg", "one_fact", "orth", "par", "plus", "tensor", "top_fact", "validate",
    "with_", "z_fact", "zero_fact", "classical_model", "enumerate_qstructures",
    "random_fact", "random_qstructure", "ray_model", "Sequent", "eval_formula",
    "fold_pars", "fold_tensors", "nnf", "parse", "parse_sequent", "right_normalize",
    "sequent_valid", "show", "ProofTree", "RuleTag", "check_proof", "check_step",
    "search", "falsify", "soundness_harness",
]
