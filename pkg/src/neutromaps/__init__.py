"""Interval fuzzy and neutrosophic map models.

Exact neutrosophic scalars ``a + bI`` (with ``I*I = I``), matrices over them,
expert-panel intervals (min, max, optimal and average matrices) and the
cognitive, relational and associative engines run over those intervals.
"""

__version__ = "0.1.0"

from .errors import (ConfigError, DimensionMismatch, DocumentSyntaxError, DomainMismatch,
                     DomainViolation, EmptyPanel, EngineError, IncomparableEntry,
                     IncomparableUnderUsual, InputError, NeutroError, NonZeroDiagonal,
                     ShapeError, ShapeMismatch, StackComponentError, TokenError)
from .scalar import (I, ONE, ZERO, NeutroScalar, Ordering, OrderMode, SignalValue, bam_signal,
                     compare, display_token, extremum, format_token, ncm_threshold, parse_token,
                     scalar, vector)
from .matrix import (CompositionRule, Domain, DomainKind, ModelMatrix, add, compose, identity,
                     scale, transpose, vec_compose)
from .norms import TCoNorm, TNorm, tnorm_compose
from .interval import (Closedness, ExpertPanel, IntervalModel, IntervalStack, RunFailure,
                       build_interval, build_stack, classify_closedness, contains,
                       interval_from_bounds, medial)
from .cognitive import (Dynamics, DynamicsKind, HiddenPattern, PatternKind, combined_map,
                        fcim_panel_run, fcm_step, hidden_pattern)
from .relational import BidirectionalPattern, BipartiteState, Side, frim_panel_run, frm_hidden_pattern
from .associative import (BamOptions, Engine, FitVector, FixedSignalPair, SignalVector, VectorSide,
                          bam_converge, fam_recall, panel_run, stack_converge)
from .fre import (FreProblem, FreSolution, FreStatus, forward, frie_compose, max_solution,
                  max_solution_matrix, optimal_resultant, solvable_necessary)
from .documents import (MatrixDocument, fixture_dir, load_document, parse_document,
                        parse_matrix_document, print_document, print_matrix_document)
from .scenario import RunReport, Scenario, load_scenario, run_scenario
from .report import emit_report
