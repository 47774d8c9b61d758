"""Run configuration collected from the command line"""

import argparse
from dataclasses import dataclass, field
from typing import Dict, List, Optional

FORMATS = ("json", "csv", "text")

# command line flag -> (option dictionary, key)
GUARDRAIL_FLAGS = {
    "max_points": ("moriyama", "max_points"),
    "max_wedge_points": ("oracle", "max_wedge_points"),
    "max_surface_points": ("oracle", "max_surface_points"),
    "max_simplices": ("oracle", "max_simplices"),
}


@dataclass
class RunConfig:
    """Everything a subcommand needs, validated once.

    Attributes:
        command (str): the subcommand
        genus (int): genus g
        n (int): number of points
        degree_bound (int): Magnus truncation bound D
        degree (Optional[int]): degree i for ``verify``
        classes (List[str]): mapping class inputs, as typed
        model (str): ``surface`` or ``wedge`` for ``oracle``
        max_power (int): bound K on boundary twist powers for the probe
        guardrails (Dict[str, int]): overridden caps, keyed by flag name
        output (Optional[str]): output file, stdout when None
        fmt (str): ``json``, ``csv`` or ``text``
        progress (bool): show progress bars
        quick (bool): reduced ``selftest`` ranges
        homological (bool): ``verify`` on homology instead of cohomology
    """

    command: str
    genus: int = 1
    n: int = 1
    degree_bound: int = 4
    degree: Optional[int] = None
    classes: List[str] = field(default_factory=list)
    model: str = "surface"
    max_power: int = 2
    guardrails: Dict[str, int] = field(default_factory=dict)
    output: Optional[str] = None
    fmt: str = "json"
    progress: bool = False
    quick: bool = False
    homological: bool = False

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be nonnegative, got {self.genus}")
        if self.n < 0:
            raise ValueError(f"number of points must be nonnegative, got {self.n}")
        if self.degree_bound < 1:
            raise ValueError(f"degree bound must be positive, got {self.degree_bound}")
        if self.degree is not None and not 0 <= self.degree <= self.n:
            raise ValueError(f"degree must lie in 0..{self.n}, got {self.degree}")
        if self.max_power < 0:
            raise ValueError(f"max power must be nonnegative, got {self.max_power}")
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        for key, value in self.guardrails.items():
            if key not in GUARDRAIL_FLAGS:
                raise ValueError(f"unknown guardrail {key!r}")
            if value < 1:
                raise ValueError(f"guardrail {key} must be positive, got {value}")

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        """Collect the parsed arguments of any subcommand"""
        guardrails = {
            key: getattr(args, key)
            for key in GUARDRAIL_FLAGS
            if getattr(args, key, None) is not None
        }
        classes = getattr(args, "classes", None) or []
        return cls(
            command=args.command,
            genus=getattr(args, "genus", 1),
            n=getattr(args, "n", 1),
            degree_bound=getattr(args, "degree_bound", 4),
            degree=getattr(args, "degree", None),
            classes=list(classes),
            model=getattr(args, "model", "surface"),
            max_power=getattr(args, "max_power", 2),
            guardrails=guardrails,
            output=args.output,
            fmt=args.fmt,
            progress=args.progress,
            quick=getattr(args, "quick", False),
            homological=getattr(args, "homological", False),
        )

    def options(self, group: str) -> Dict[str, int]:
        """guardrail overrides belonging to one option dictionary"""
        out = {}
        for flag, value in self.guardrails.items():
            owner, key = GUARDRAIL_FLAGS[flag]
            if owner == group:
                out[key] = value
        return out

    def echo(self) -> Dict:
        """exact input echo embedded in every report"""
        return {
            "command": self.command,
            "g": self.genus,
            "n": self.n,
            "D": self.degree_bound,
            "i": self.degree,
            "classes": list(self.classes),
            "model": self.model,
            "max_power": self.max_power,
            "overrides": dict(sorted(self.guardrails.items())),
            "format": self.fmt,
            "homological": self.homological,
        }
