"""Partition figures transcribed from the printed grids.

Each entry gives the rule, the printed row and column ranges, and the grid
with ``0`` for class A, ``1`` for class B and ``.`` outside B.
"""

from .partitions import DPartition, EPartition, ZeroPartition

FIGURES = {
    "D:a=8,c=3": dict(
        rule=DPartition(8, 3),
        rows=range(0, 11),
        cols=range(-9, 6),
        grid="""\
.........100011
........1100011
.......01100011
......001100011
.....1001100011
....10001100011
...110001100011
..0110001100011
.00110001100011
100110001100011
000110001100011""",
    ),
    "E:a=6,d=5": dict(
        rule=EPartition(6, 5),
        rows=range(0, 8),
        cols=range(-7, 8),
        grid="""\
.......00011100
......100011100
.....1100011100
....01100011100
...001100011100
..0001100011100
.10001110011100
110001110011100""",
    ),
    "Z:d=5": dict(
        rule=ZeroPartition(5),
        rows=range(0, 8),
        cols=range(-7, 14),
        grid="""\
.......00011100111001
......100011100111001
.....1100011100111001
....01100011100111001
...001100011100111001
..0001100011100111001
.10001100011100111001
110001100011100111001""",
    ),
}
