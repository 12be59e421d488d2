"""Count-based filtering of lexical type assignments for coordinated sentences."""

from .conjoin import (FilterStats, PairVerdict, Violation, conjoinable, conjoinable_for,
                      filter_product, lambda_rho)
from .lexicon import (Assignment, CoordSplit, Lexicon, enumerate_side, load_lexicon,
                      possible_assignments_count, split_coordination)
from .occurrence import (Occurrence, Polarity, Quadruple, Register, Side, SideVerdict,
                         occurrences, quad, saturate, seq_occurrences)
from .oracle import CoordWitness, ab_derive, coord_derive, derivable_types
from .typealg import (Basic, Frac, basics_of, count, count_invariance_holds, count_seq,
                      format_type, parse_type)

__all__ = [name for name in dir() if not name.startswith("_")]
