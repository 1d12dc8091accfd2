from __future__ import annotations

import argparse
from dataclasses import dataclass
from typing import Optional

from glue_core.exceptions import EnumerationError, SchemeError
from glue_enum.configurations import check_quad_count
from glue_enum.gluings import EQUIVALENCES

COMMANDS = ("classify", "canon", "vertices", "glue", "enumerate", "configs")
FORMATS = ("table", "json", "csv")

SCHEME_COMMANDS = {"classify", "canon", "vertices", "glue"}
QUAD_COMMANDS = {"enumerate", "configs"}


@dataclass(frozen=True)
class CliConfig:
    command: str
    scheme_arg: Optional[str] = None
    quads: Optional[int] = None
    format: str = "table"
    list_representatives: bool = False
    index1: Optional[int] = None  # 1-based, as typed
    index2: Optional[int] = None
    non_orientable: bool = False
    compare: bool = False
    equivalence: str = "stabilizer"
    workers: int = 1
    reference: Optional[str] = None
    scheme_file: Optional[str] = None

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise SchemeError(f"unknown command: {self.command}")
        if self.format not in FORMATS:
            raise SchemeError(f"unknown format: {self.format}")
        if self.command in SCHEME_COMMANDS:
            has_file = self.command == "classify" and self.scheme_file is not None
            if self.scheme_arg is None and not has_file:
                raise SchemeError(f"'{self.command}' requires a scheme argument")
        if self.command == "glue" and (self.index1 is None or self.index2 is None):
            raise SchemeError("'glue' requires two 1-based side indices")
        if self.command in QUAD_COMMANDS:
            if self.quads is None:
                raise EnumerationError(f"'{self.command}' requires --quads")
            check_quad_count(self.quads)
        if self.equivalence not in EQUIVALENCES:
            raise EnumerationError(f"unknown equivalence: {self.equivalence}")
        if self.workers < 1:
            raise EnumerationError(f"workers must be at least 1, got {self.workers}")

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "CliConfig":
        return cls(
            command=args.command,
            scheme_arg=getattr(args, "scheme", None),
            quads=getattr(args, "quads", None),
            format=getattr(args, "format", "table") or "table",
            list_representatives=bool(getattr(args, "list", False)),
            index1=getattr(args, "i1", None),
            index2=getattr(args, "i2", None),
            non_orientable=bool(getattr(args, "non_orientable", False)),
            compare=bool(getattr(args, "compare", False)),
            equivalence=getattr(args, "equivalence", "stabilizer"),
            workers=getattr(args, "workers", 1),
            reference=getattr(args, "reference", None),
            scheme_file=getattr(args, "file", None),
        )
