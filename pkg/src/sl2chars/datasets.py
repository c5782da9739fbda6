"""Embedded datasets for the published number-field tables.

Coefficients are ascending.  The field discriminants are carried as
metadata only; reproduction keys rows by their defining polynomial.
Table 3 is restricted to the rows of degree at most 3.
"""

from __future__ import annotations

from dataclasses import dataclass

SOURCE_TAG = "published-tables"


@dataclass(frozen=True)
class TableRow:
    label: str             # "(n,r)" signature or "l=..." for table 3
    disc: int              # field discriminant (metadata)
    coeffs: tuple[int, ...]
    expected_order: int    # congruence character-group order
    flagged_unknown: bool = False  # total character group not settled


# First fields of each signature with a nontrivial character group.
TABLE1 = (
    TableRow("(2,0)", -3, (1, -1, 1), 3),
    TableRow("(2,2)", 8, (-2, 0, 1), 4),
    TableRow("(3,1)", -31, (-1, 1, 0, 1), 3),
    TableRow("(3,3)", 81, (-1, -3, 0, 1), 3),
    TableRow("(4,0)", 189, (1, 2, 0, -1, 1), 3),
    TableRow("(4,2)", -491, (-1, 3, -1, -1, 1), 3),
    TableRow("(4,4)", 1957, (1, -1, -4, 0, 1), 3),
    TableRow("(5,1)", 3089, (-1, 2, 0, -1, 0, 1), 3),
    TableRow("(5,3)", -9439, (1, -2, 1, -1, -1, 1), 3),
    TableRow("(5,5)", 36497, (-1, 1, 5, -3, -2, 1), 3),
    TableRow("(6,0)", -19683, (1, 0, 0, -1, 0, 0, 1), 3),
    TableRow("(6,2)", 63909, (-1, -1, 0, 0, 2, 0, 1), 3),
    TableRow("(6,4)", -233003, (-1, 1, 4, -3, -3, 0, 1), 3),
    TableRow("(6,6)", 1259712, (-3, 0, 9, 0, -6, 0, 1), 3),
    TableRow("(7,1)", -435247, (1, 2, -1, -1, 3, -1, -1, 1), 3),
    TableRow("(7,3)", 1602761, (1, -4, 5, -3, 1, 2, -2, 1), 3),
    TableRow("(7,5)", -6930439, (1, 3, -3, -2, 5, -3, -1, 1), 3),
    TableRow("(7,7)", 25164057, (1, -2, -10, 7, 9, -5, -2, 1), 3),
)

# First fields of each signature with character-group order 12^degree.
# The (2,0) row is flagged: only the congruence count is known there.
TABLE2 = (
    TableRow("(2,0)", -23, (6, -1, 1), 144, flagged_unknown=True),
    TableRow("(2,2)", 73, (-18, -1, 1), 144),
    TableRow("(3,1)", -10079, (-36, 11, 0, 1), 1728),
    TableRow("(3,3)", 49681, (-12, -37, 0, 1), 1728),
    TableRow("(4,0)", 940033, (384, 4, 44, -1, 1), 20736),
)

# First totally real abelian fields unramified outside one prime l with
# character-group order 12^degree; degree <= 3 rows only.
TABLE3 = (
    TableRow("l=73", 73, (-18, -1, 1), 144),
    TableRow("l=307", 307, (216, -102, -1, 1), 1728),
)

TABLES = {1: TABLE1, 2: TABLE2, 3: TABLE3}
