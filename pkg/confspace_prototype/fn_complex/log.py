from dataclasses import dataclass, field
from typing import Dict


@dataclass
class BuildLog:
    cells: Dict[int, int] = field(default_factory=dict)
    nonzeros: Dict[int, int] = field(default_factory=dict)

    def update(self, degree: int, cells: int, nonzeros: int) -> None:
        self.cells[degree] = cells
        self.nonzeros[degree] = nonzeros
