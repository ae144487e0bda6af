# SPDX-License-Identifier: MIT
"""Enumerations module. Contains commonly used enum types for the library."""

from enum import Enum


class SubsystemEnum(str, Enum):
    """Selector for one side of the qubit-qutrit composite."""

    A = "A"
    B = "B"

    def __str__(self) -> str:
        return self.value


class DiscordClassEnum(str, Enum):
    """Shape of a discord trajectory."""

    INVARIANT = "invariant"
    FROZEN_THEN_DECAY = "frozen-then-decay"
    DECAYING = "decaying"

    def __str__(self) -> str:
        return self.value


class EigenBackendEnum(str, Enum):
    """Hermitian eigensolver backends."""

    JACOBI = "jacobi"
    LAPACK = "lapack"


class OutputFormatEnum(str, Enum):
    """Output formats of the command line."""

    CSV = "csv"
    JSON = "json"

    def __str__(self) -> str:
        return self.value


class CommandEnum(str, Enum):
    """Command line subcommands."""

    TRAJECTORY = "trajectory"
    SWEEP = "sweep"
    VERIFY = "verify"
