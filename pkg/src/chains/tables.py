"""
The nine parallel-chain tables of L(5, n)

Each family is an ordered list of printed anchor rows (affine in i, j, k,
u, w, p, q, n) and, for every anchor after the first, the move that
reaches it from the previous anchor:

    Step(c)          coordinate c rises by 1 until it reaches the anchor
                     (a printed row of vertical dots, or adjacent rows that
                     differ by one)
    Zigzag(a, b)     coordinates a and b rise by 1 alternately, a first
                     (two lines of dots with helper rows in t)

Coordinates are 0-based here: A1 is a1, ..., A5 is a5.
"""
from collections import namedtuple
from dataclasses import dataclass

A1, A2, A3, A4, A5 = range(5)

FAMILY_IDS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9")

# Everything an anchor expression may refer to
TableVars = namedtuple("TableVars", ["i", "j", "k", "u", "w", "p", "q", "n"])

# Row index layouts
ROWS_P = "p"              # p = 0 .. K ascending
ROWS_P_DESCENDING = "p-desc"  # p = K .. 0
ROWS_QP = "qp"            # (q, p) in L(2, k), grouped by its symmetric chains


@dataclass(frozen=True)
class Step:
    coord: int


@dataclass(frozen=True)
class Zigzag:
    leader: int
    follower: int


@dataclass(frozen=True)
class Anchor:
    move: object
    row: object
    # Dropped when the family's equality case starts the chain later
    head: bool = False


@dataclass(frozen=True)
class FamilyTable:
    family: str
    cost: object
    exact: bool
    free: tuple
    row_layout: str
    row_bound: object
    anchors: tuple
    starts_late: object = None

    def holds(self, v):
        """The family's header condition at these parameters"""
        if self.exact:
            return self.cost(v) == v.n
        return self.cost(v) <= v.n


C1 = FamilyTable(
    family="C1",
    cost=lambda v: 2 + 2*v.i + 2*v.j + 3*v.k,
    exact=False,
    free=("i", "j", "k"),
    row_layout=ROWS_P,
    row_bound=lambda v: v.k,
    anchors=(
        Anchor(None, lambda v: (v.p, v.k, v.j + v.k, 1 + v.i + v.j + 2*v.k, 1 + v.i + 2*v.j + 2*v.k)),
        Anchor(Step(A3), lambda v: (v.p, v.k, 1 + v.i + v.j + v.k + v.p, 1 + v.i + v.j + 2*v.k, 1 + v.i + 2*v.j + 2*v.k)),
        Anchor(Step(A2), lambda v: (v.p, 1 + v.i + v.j + v.k, 1 + v.i + v.j + v.k + v.p, 1 + v.i + v.j + 2*v.k, 1 + v.i + 2*v.j + 2*v.k)),
        Anchor(Step(A1), lambda v: (1 + v.i + v.k, 1 + v.i + v.j + v.k, 1 + v.i + v.j + v.k + v.p, 1 + v.i + v.j + 2*v.k, 1 + v.i + 2*v.j + 2*v.k)),
        Anchor(Step(A5), lambda v: (1 + v.i + v.k, 1 + v.i + v.j + v.k, 1 + v.i + v.j + v.k + v.p, 1 + v.i + v.j + 2*v.k, v.n - v.k + v.p)),
        Anchor(Step(A4), lambda v: (1 + v.i + v.k, 1 + v.i + v.j + v.k, 1 + v.i + v.j + v.k + v.p, v.n - v.k, v.n - v.k + v.p)),
        Anchor(Step(A3), lambda v: (1 + v.i + v.k, 1 + v.i + v.j + v.k, v.n - v.j - v.k, v.n - v.k, v.n - v.k + v.p)),
        Anchor(Step(A2), lambda v: (1 + v.i + v.k, v.n - 1 - v.i - v.j - 2*v.k, v.n - v.j - v.k, v.n - v.k, v.n - v.k + v.p)),
        Anchor(Step(A1), lambda v: (v.n - 1 - v.i - 2*v.j - 2*v.k, v.n - 1 - v.i - v.j - 2*v.k, v.n - v.j - v.k, v.n - v.k, v.n - v.k + v.p)),
    ),
)

# Row p starts at rank 3+2i+4j+7k-p, so the ladder lists p descending
C2 = FamilyTable(
    family="C2",
    cost=lambda v: 3 + 2*v.i + 2*v.j + 3*v.k,
    exact=False,
    free=("i", "j", "k"),
    row_layout=ROWS_P_DESCENDING,
    row_bound=lambda v: v.k,
    anchors=(
        Anchor(None, lambda v: (v.k - v.p, v.k, v.j + v.k, 1 + v.i + v.j + 2*v.k, 2 + v.i + 2*v.j + 2*v.k)),
        Anchor(Step(A5), lambda v: (v.k - v.p, v.k, v.j + v.k, 1 + v.i + v.j + 2*v.k, v.n - 1 - v.i - v.k)),
        Anchor(Step(A4), lambda v: (v.k - v.p, v.k, v.j + v.k, v.n - 1 - v.i - v.j - v.k, v.n - 1 - v.i - v.k)),
        Anchor(Step(A3), lambda v: (v.k - v.p, v.k, v.n - 1 - v.i - v.j - v.k - v.p, v.n - 1 - v.i - v.j - v.k, v.n - 1 - v.i - v.k)),
        Anchor(Step(A2), lambda v: (v.k - v.p, v.n - 1 - v.i - v.j - 2*v.k, v.n - 1 - v.i - v.j - v.k - v.p, v.n - 1 - v.i - v.j - v.k, v.n - 1 - v.i - v.k)),
        Anchor(Step(A1), lambda v: (v.n - 1 - v.i - 2*v.j - 2*v.k, v.n - 1 - v.i - v.j - 2*v.k, v.n - 1 - v.i - v.j - v.k - v.p, v.n - 1 - v.i - v.j - v.k, v.n - 1 - v.i - v.k)),
        Anchor(Step(A5), lambda v: (v.n - 1 - v.i - 2*v.j - 2*v.k, v.n - 1 - v.i - v.j - 2*v.k, v.n - 1 - v.i - v.j - v.k - v.p, v.n - 1 - v.i - v.j - v.k, v.n - v.p)),
        Anchor(Step(A4), lambda v: (v.n - 1 - v.i - 2*v.j - 2*v.k, v.n - 1 - v.i - v.j - 2*v.k, v.n - 1 - v.i - v.j - v.k - v.p, v.n - v.k, v.n - v.p)),
        Anchor(Step(A3), lambda v: (v.n - 1 - v.i - 2*v.j - 2*v.k, v.n - 1 - v.i - v.j - 2*v.k, v.n - 1 - v.j - v.k, v.n - v.k, v.n - v.p)),
    ),
)

C3 = FamilyTable(
    family="C3",
    cost=lambda v: 2*v.u + 1 + 6*v.j + 4*v.k + 3*v.i,
    exact=False,
    free=("i", "j", "k", "u"),
    row_layout=ROWS_P,
    row_bound=lambda v: 2*v.k + v.u,
    anchors=(
        Anchor(None, lambda v: (2*v.j, v.i + 2*v.j + v.p, v.i + 2*v.j + 2*v.k + v.u, 2*v.i + 4*v.j + 2*v.k + v.u, 2*v.i + 4*v.j + 4*v.k + 2*v.u)),
        Anchor(Zigzag(A1, A3), lambda v: (v.i + 2*v.j, v.i + 2*v.j + v.p, 2*v.i + 2*v.j + 2*v.k + v.u, 2*v.i + 4*v.j + 2*v.k + v.u, 2*v.i + 4*v.j + 4*v.k + 2*v.u)),
        Anchor(Step(A5), lambda v: (v.i + 2*v.j, v.i + 2*v.j + v.p, 2*v.i + 2*v.j + 2*v.k + v.u, 2*v.i + 4*v.j + 2*v.k + v.u, v.n - 2*v.j)),
        Anchor(Step(A4), lambda v: (v.i + 2*v.j, v.i + 2*v.j + v.p, 2*v.i + 2*v.j + 2*v.k + v.u, v.n - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 2*v.j)),
        Anchor(Step(A3), lambda v: (v.i + 2*v.j, v.i + 2*v.j + v.p, v.n - v.i - 2*v.j - 2*v.k - v.u, v.n - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 2*v.j)),
        Anchor(Step(A2), lambda v: (v.i + 2*v.j, v.n - 2*v.i - 4*v.j - 2*v.k - v.u, v.n - v.i - 2*v.j - 2*v.k - v.u, v.n - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 2*v.j)),
        Anchor(Step(A1), lambda v: (v.n - 2*v.i - 4*v.j - 4*v.k - 2*v.u, v.n - 2*v.i - 4*v.j - 2*v.k - v.u, v.n - v.i - 2*v.j - 2*v.k - v.u, v.n - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 2*v.j)),
    ),
)

C4 = FamilyTable(
    family="C4",
    cost=lambda v: 2*v.u + 4 + 6*v.j + 4*v.k + 3*v.i,
    exact=False,
    free=("i", "j", "k", "u"),
    row_layout=ROWS_P,
    row_bound=lambda v: 2*v.k + v.u,
    anchors=(
        Anchor(None, lambda v: (1 + 2*v.j, 1 + v.i + 2*v.j + v.p, 1 + v.i + 2*v.j + 2*v.k + v.u, 2 + 2*v.i + 4*v.j + 2*v.k + v.u, 3 + 2*v.i + 4*v.j + 4*v.k + 2*v.u)),
        Anchor(Zigzag(A3, A1), lambda v: (1 + v.i + 2*v.j, 1 + v.i + 2*v.j + v.p, 1 + 2*v.i + 2*v.j + 2*v.k + v.u, 2 + 2*v.i + 4*v.j + 2*v.k + v.u, 3 + 2*v.i + 4*v.j + 4*v.k + 2*v.u)),
        Anchor(Step(A5), lambda v: (1 + v.i + 2*v.j, 1 + v.i + 2*v.j + v.p, 1 + 2*v.i + 2*v.j + 2*v.k + v.u, 2 + 2*v.i + 4*v.j + 2*v.k + v.u, v.n - 1 - 2*v.j)),
        Anchor(Step(A4), lambda v: (1 + v.i + 2*v.j, 1 + v.i + 2*v.j + v.p, 1 + 2*v.i + 2*v.j + 2*v.k + v.u, v.n - 1 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 1 - 2*v.j)),
        Anchor(Step(A3), lambda v: (1 + v.i + 2*v.j, 1 + v.i + 2*v.j + v.p, v.n - 1 - v.i - 2*v.j - 2*v.k - v.u, v.n - 1 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 1 - 2*v.j)),
        Anchor(Step(A2), lambda v: (1 + v.i + 2*v.j, v.n - 2 - 2*v.i - 4*v.j - 2*v.k - v.u, v.n - 1 - v.i - 2*v.j - 2*v.k - v.u, v.n - 1 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 1 - 2*v.j)),
        Anchor(Step(A1), lambda v: (v.n - 3 - 2*v.i - 4*v.j - 4*v.k - 2*v.u, v.n - 2 - 2*v.i - 4*v.j - 2*v.k - v.u, v.n - 1 - v.i - 2*v.j - 2*v.k - v.u, v.n - 1 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 1 - 2*v.j)),
    ),
)

C5 = FamilyTable(
    family="C5",
    cost=lambda v: 2*v.u + 4 + 6*v.j + 4*v.k + 3*v.i,
    exact=False,
    free=("i", "j", "k", "u"),
    row_layout=ROWS_P,
    row_bound=lambda v: 2*v.k + v.u,
    anchors=(
        Anchor(None, lambda v: (2*v.j, 1 + v.i + 2*v.j + v.p, 1 + v.i + 2*v.j + 2*v.k + v.u, 2 + 2*v.i + 4*v.j + 2*v.k + v.u, 3 + 2*v.i + 4*v.j + 4*v.k + 2*v.u)),
        Anchor(Step(A5), lambda v: (2*v.j, 1 + v.i + 2*v.j + v.p, 1 + v.i + 2*v.j + 2*v.k + v.u, 2 + 2*v.i + 4*v.j + 2*v.k + v.u, v.n - 1 - v.i - 2*v.j)),
        Anchor(Step(A4), lambda v: (2*v.j, 1 + v.i + 2*v.j + v.p, 1 + v.i + 2*v.j + 2*v.k + v.u, v.n - 1 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 1 - v.i - 2*v.j)),
        Anchor(Step(A3), lambda v: (2*v.j, 1 + v.i + 2*v.j + v.p, v.n - 2 - 2*v.i - 2*v.j - 2*v.k - v.u, v.n - 1 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 1 - v.i - 2*v.j)),
        Anchor(Step(A2), lambda v: (2*v.j, v.n - 2 - 2*v.i - 4*v.j - 2*v.k - v.u, v.n - 2 - 2*v.i - 2*v.j - 2*v.k - v.u, v.n - 1 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 1 - v.i - 2*v.j)),
        Anchor(Step(A1), lambda v: (v.n - 2 - 2*v.i - 4*v.j - 4*v.k - 2*v.u, v.n - 2 - 2*v.i - 4*v.j - 2*v.k - v.u, v.n - 2 - 2*v.i - 2*v.j - 2*v.k - v.u, v.n - 1 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 1 - v.i - 2*v.j)),
        Anchor(Zigzag(A3, A5), lambda v: (v.n - 2 - 2*v.i - 4*v.j - 4*v.k - 2*v.u, v.n - 2 - 2*v.i - 4*v.j - 2*v.k - v.u, v.n - 1 - v.i - 2*v.j - 2*v.k - v.u, v.n - 1 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 1 - 2*v.j)),
    ),
)

# The gray row is where chains start when 2u+7+6j+4k+3i = n
C6 = FamilyTable(
    family="C6",
    cost=lambda v: 2*v.u + 7 + 6*v.j + 4*v.k + 3*v.i,
    exact=False,
    free=("i", "j", "k", "u"),
    row_layout=ROWS_P,
    row_bound=lambda v: 2*v.k + v.u,
    anchors=(
        Anchor(None, lambda v: (1 + 2*v.j, 2 + v.i + 2*v.j + v.p, 2 + v.i + 2*v.j + 2*v.k + v.u, 4 + 2*v.i + 4*v.j + 2*v.k + v.u, 6 + 2*v.i + 4*v.j + 4*v.k + 2*v.u), head=True),
        Anchor(Step(A5), lambda v: (1 + 2*v.j, 2 + v.i + 2*v.j + v.p, 2 + v.i + 2*v.j + 2*v.k + v.u, 4 + 2*v.i + 4*v.j + 2*v.k + v.u, v.n - 2 - v.i - 2*v.j), head=True),
        Anchor(Step(A4), lambda v: (1 + 2*v.j, 2 + v.i + 2*v.j + v.p, 2 + v.i + 2*v.j + 2*v.k + v.u, 5 + 2*v.i + 4*v.j + 2*v.k + v.u, v.n - 2 - v.i - 2*v.j)),
        Anchor(Step(A4), lambda v: (1 + 2*v.j, 2 + v.i + 2*v.j + v.p, 2 + v.i + 2*v.j + 2*v.k + v.u, v.n - 2 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 2 - v.i - 2*v.j)),
        Anchor(Step(A3), lambda v: (1 + 2*v.j, 2 + v.i + 2*v.j + v.p, v.n - 3 - 2*v.i - 2*v.j - 2*v.k - v.u, v.n - 2 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 2 - v.i - 2*v.j)),
        Anchor(Step(A2), lambda v: (1 + 2*v.j, v.n - 4 - 2*v.i - 4*v.j - 2*v.k - v.u, v.n - 3 - 2*v.i - 2*v.j - 2*v.k - v.u, v.n - 2 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 2 - v.i - 2*v.j)),
        Anchor(Step(A1), lambda v: (v.n - 5 - 2*v.i - 4*v.j - 4*v.k - 2*v.u, v.n - 4 - 2*v.i - 4*v.j - 2*v.k - v.u, v.n - 3 - 2*v.i - 2*v.j - 2*v.k - v.u, v.n - 2 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 2 - v.i - 2*v.j)),
        Anchor(Zigzag(A5, A3), lambda v: (v.n - 5 - 2*v.i - 4*v.j - 4*v.k - 2*v.u, v.n - 4 - 2*v.i - 4*v.j - 2*v.k - v.u, v.n - 3 - v.i - 2*v.j - 2*v.k - v.u, v.n - 2 - v.i - 2*v.j - 2*v.k + v.p - v.u, v.n - 1 - 2*v.j)),
    ),
    starts_late=lambda v: 2*v.u + 7 + 6*v.j + 4*v.k + 3*v.i == v.n,
)

C7 = FamilyTable(
    family="C7",
    cost=lambda v: 6 + 3*v.u + 6*v.w + 6*v.i + 2*v.k,
    exact=True,
    free=("i", "k", "w"),
    row_layout=ROWS_QP,
    row_bound=lambda v: v.k,
    anchors=(
        Anchor(None, lambda v: (1 + v.i, 2 + 2*v.i + v.p + v.u + 2*v.w, 3 + 3*v.i + v.k + v.u + 2*v.w, 4 + 4*v.i + v.k + v.q + 2*v.u + 4*v.w, 4 + 4*v.i + 2*v.k + 2*v.u + 4*v.w)),
        Anchor(Step(A1), lambda v: (1 + v.i + v.u + 2*v.w, 2 + 2*v.i + v.p + v.u + 2*v.w, 3 + 3*v.i + v.k + v.u + 2*v.w, 4 + 4*v.i + v.k + v.q + 2*v.u + 4*v.w, 4 + 4*v.i + 2*v.k + 2*v.u + 4*v.w)),
        Anchor(Step(A3), lambda v: (1 + v.i + v.u + 2*v.w, 2 + 2*v.i + v.p + v.u + 2*v.w, 3 + 3*v.i + v.k + 2*v.u + 4*v.w, 4 + 4*v.i + v.k + v.q + 2*v.u + 4*v.w, 4 + 4*v.i + 2*v.k + 2*v.u + 4*v.w)),
        Anchor(Step(A5), lambda v: (1 + v.i + v.u + 2*v.w, 2 + 2*v.i + v.p + v.u + 2*v.w, 3 + 3*v.i + v.k + 2*v.u + 4*v.w, 4 + 4*v.i + v.k + v.q + 2*v.u + 4*v.w, 5 + 4*v.i + 2*v.k + 2*v.u + 4*v.w)),
        Anchor(Step(A1), lambda v: (1 + 2*v.i + v.u + 2*v.w, 2 + 2*v.i + v.p + v.u + 2*v.w, 3 + 3*v.i + v.k + 2*v.u + 4*v.w, 4 + 4*v.i + v.k + v.q + 2*v.u + 4*v.w, 5 + 4*v.i + 2*v.k + 2*v.u + 4*v.w)),
        Anchor(Step(A5), lambda v: (1 + 2*v.i + v.u + 2*v.w, 2 + 2*v.i + v.p + v.u + 2*v.w, 3 + 3*v.i + v.k + 2*v.u + 4*v.w, 4 + 4*v.i + v.k + v.q + 2*v.u + 4*v.w, 5 + 5*v.i + 2*v.k + 3*v.u + 6*v.w)),
        Anchor(Step(A1), lambda v: (2 + 2*v.i + v.u + 2*v.w, 2 + 2*v.i + v.p + v.u + 2*v.w, 3 + 3*v.i + v.k + 2*v.u + 4*v.w, 4 + 4*v.i + v.k + v.q + 2*v.u + 4*v.w, 5 + 5*v.i + 2*v.k + 3*v.u + 6*v.w)),
    ),
)

C8 = FamilyTable(
    family="C8",
    cost=lambda v: 12 - 3*v.u + 6*v.w + 6*v.i + 2*v.k,
    exact=True,
    free=("i", "k", "w"),
    row_layout=ROWS_QP,
    row_bound=lambda v: v.k,
    anchors=(
        Anchor(None, lambda v: (1 + v.i, 4 + 2*v.i + v.p - v.u + 2*v.w, 5 + 3*v.i + v.k - v.u + 2*v.w, 8 + 4*v.i + v.k + v.q - 2*v.u + 4*v.w, 9 + 4*v.i + 2*v.k - 2*v.u + 4*v.w)),
        Anchor(Step(A1), lambda v: (3 + 2*v.i - v.u + 2*v.w, 4 + 2*v.i + v.p - v.u + 2*v.w, 5 + 3*v.i + v.k - v.u + 2*v.w, 8 + 4*v.i + v.k + v.q - 2*v.u + 4*v.w, 9 + 4*v.i + 2*v.k - 2*v.u + 4*v.w)),
        Anchor(Step(A5), lambda v: (3 + 2*v.i - v.u + 2*v.w, 4 + 2*v.i + v.p - v.u + 2*v.w, 5 + 3*v.i + v.k - v.u + 2*v.w, 8 + 4*v.i + v.k + v.q - 2*v.u + 4*v.w, 9 + 5*v.i + 2*v.k - 2*v.u + 4*v.w)),
        Anchor(Step(A1), lambda v: (4 + 2*v.i - v.u + 2*v.w, 4 + 2*v.i + v.p - v.u + 2*v.w, 5 + 3*v.i + v.k - v.u + 2*v.w, 8 + 4*v.i + v.k + v.q - 2*v.u + 4*v.w, 9 + 5*v.i + 2*v.k - 2*v.u + 4*v.w)),
        Anchor(Step(A3), lambda v: (4 + 2*v.i - v.u + 2*v.w, 4 + 2*v.i + v.p - v.u + 2*v.w, 7 + 3*v.i + v.k - 2*v.u + 4*v.w, 8 + 4*v.i + v.k + v.q - 2*v.u + 4*v.w, 9 + 5*v.i + 2*v.k - 2*v.u + 4*v.w)),
        Anchor(Step(A5), lambda v: (4 + 2*v.i - v.u + 2*v.w, 4 + 2*v.i + v.p - v.u + 2*v.w, 7 + 3*v.i + v.k - 2*v.u + 4*v.w, 8 + 4*v.i + v.k + v.q - 2*v.u + 4*v.w, 10 + 5*v.i + 2*v.k - 3*v.u + 6*v.w)),
    ),
)

C9 = FamilyTable(
    family="C9",
    cost=lambda v: 2*v.k + 3*v.u + 6*v.w,
    exact=True,
    free=("k", "w"),
    row_layout=ROWS_QP,
    row_bound=lambda v: v.k,
    anchors=(
        Anchor(None, lambda v: (0, v.p + v.u + 2*v.w, v.k + v.u + 2*v.w, v.k + v.q + 2*v.u + 4*v.w, 2*v.k + 2*v.u + 4*v.w)),
        Anchor(Step(A1), lambda v: (v.u + 2*v.w, v.p + v.u + 2*v.w, v.k + v.u + 2*v.w, v.k + v.q + 2*v.u + 4*v.w, 2*v.k + 2*v.u + 4*v.w)),
        Anchor(Step(A3), lambda v: (v.u + 2*v.w, v.p + v.u + 2*v.w, v.k + 2*v.u + 4*v.w, v.k + v.q + 2*v.u + 4*v.w, 2*v.k + 2*v.u + 4*v.w)),
        Anchor(Step(A5), lambda v: (v.u + 2*v.w, v.p + v.u + 2*v.w, v.k + 2*v.u + 4*v.w, v.k + v.q + 2*v.u + 4*v.w, 2*v.k + 3*v.u + 6*v.w)),
    ),
)

FAMILY_TABLES = {table.family: table for table in (C1, C2, C3, C4, C5, C6, C7, C8, C9)}
