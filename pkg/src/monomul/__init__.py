"""Wide unsigned multipliers composed from minimized monolithic blocks."""
from .compose import (MulPlan, PartialTerm, SplitPlan, block_requirements, default_group_width,
                      plan_partial_products, split_operand)
from .emit import StatsReport, read_pla, stats_for, write_pla, write_stats, write_verilog
from .minimize import (ArityError, Cover, Cube, Provenance, check_equivalence, full_dnf,
                       minimize, minimize_exact, minimize_heuristic)
from .netlist import Netlist, check_structure, evaluate, evaluate_many, lower
from .pipeline import Design, block_cover, build
from .reduce import AdderTreePlan, PreAdd, Summand, common_case_adders, pack_summands, tree_depth
from .tables import ArithMode, TruthFunction, block_truth_table, dnf_disjunction_count, gen_truth_table
from .verify import VerifyConfig, VerifyResult, reproduce_tables, run_verify

__version__ = "0.1.0"
