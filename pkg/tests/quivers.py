"""Shared small quivers for the test suite."""

from klrcenter.rootdata import Quiver

A1 = Quiver(("1",), ())
A2 = Quiver(("1", "2"), ((0, 1),))
A2_REV = Quiver(("1", "2"), ((1, 0),))
A3 = Quiver(("1", "2", "3"), ((0, 1), (1, 2)))
D4 = Quiver(("0", "1", "2", "3"), ((1, 0), (2, 0), (3, 0)))
DISCONNECTED = Quiver(("1", "2"), ())
