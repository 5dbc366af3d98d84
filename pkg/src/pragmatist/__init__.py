"""Pragmatist proof-theoretic validity for propositional logic.

Arguments, their structural classification, complementations, validity
witnesses, and the extraction of natural deduction derivations from
witnesses, checked against an independent intuitionistic decision
procedure.
"""
from .argument import (
    Argument, Rule, critical_subarguments, degree_of_argument, hole, is_canonical,
    is_placid, is_principal, is_proper, leaf, open_assumptions, principal_path,
    proper_part, step,
)
from .complement import Complementation, FreshAtoms, check_complementation, proof_case_complementation
from .extract import ExtractionError, extract, extract_report
from .formula import And, Atom, Bot, Formula, Imp, Or, degree, parse
from .ndcalc import check_nj, is_normal, normalize
from .oracle import provable
from .textio import dump_argument, load_argument
from .witness import Package, ValidityWitness, check_validity, load_witness, search_witness

__version__ = "0.1.0"
