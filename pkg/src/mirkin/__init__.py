"""Exact solvers and hardness reductions for Mirkin distance minimization
on binary strings."""
from .bitcore import (BitString, MirkinInstance, complement, concat, delete,
                      hamming, insert, mirkin_pair, mirkin_total)
from .errors import (ArithmeticOverflow, InfeasibleBudget, InstanceTooLarge,
                     InvalidParameter, LengthMismatch, MirkinError, ParseError,
                     PositionOutOfRange)
from .gadget import GadgetFamily, build, check_half_half
from .reduction import (CnfFormula, Literal, NaeFormula, ReductionCertificate,
                        clause_triple, gamma, parse_dimacs_cnf, parse_dimacs_nae,
                        reduce_3sat_to_nae, reduce_nae_to_mirkin, variable_gadget)
from .report import PropertyReport
from .solver import (ColumnTypeSummary, IlpModel, SolveResult, build_ilp,
                     column_types, export_lp, solve, solve_brute, solve_ilp,
                     solve_types)

__version__ = "0.1.0"
