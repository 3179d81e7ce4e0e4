"""Seizure-type label set and the two classification problems.

The corpus annotates eight seizure types; myoclonic seizures (MYSZ) are
recorded from too few patients to support patient-held-out evaluation and
are rejected at parse time, leaving seven usable classes.  The 5-class
problem keeps only the clinically specific types, dropping the two
non-specific labels FNSZ and GNSZ.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class SeizureClass(enum.IntEnum):
    FNSZ = 0
    GNSZ = 1
    SPSZ = 2
    CPSZ = 3
    ABSZ = 4
    TNSZ = 5
    TCSZ = 6

    @classmethod
    def from_string(cls, text: str) -> "SeizureClass":
        return cls[text.strip().upper()]


#: label accepted by the annotation parser but silently dropped
EXCLUDED_LABEL = "MYSZ"

#: every label the source corpus may contain
KNOWN_LABELS = frozenset(c.name for c in SeizureClass) | {EXCLUDED_LABEL}

SEVEN_CLASS = (
    SeizureClass.FNSZ, SeizureClass.GNSZ, SeizureClass.SPSZ,
    SeizureClass.CPSZ, SeizureClass.ABSZ, SeizureClass.TNSZ,
    SeizureClass.TCSZ,
)

FIVE_CLASS = (
    SeizureClass.SPSZ, SeizureClass.CPSZ, SeizureClass.ABSZ,
    SeizureClass.TNSZ, SeizureClass.TCSZ,
)


@dataclass(frozen=True)
class ProblemSpec:
    """A named classification problem: which subset of labels is in play."""

    name: str
    classes: tuple[SeizureClass, ...]

    @classmethod
    def seven_class(cls) -> "ProblemSpec":
        return cls("7-class", SEVEN_CLASS)

    @classmethod
    def five_class(cls) -> "ProblemSpec":
        return cls("5-class", FIVE_CLASS)

    @classmethod
    def by_name(cls, name: str) -> "ProblemSpec":
        key = name.strip().lower().replace("_", "-").replace("class", "").strip("-")
        if key == "7":
            return cls.seven_class()
        if key == "5":
            return cls.five_class()
        raise ValueError(f"unknown problem {name!r}; expected '7-class' or '5-class'")
