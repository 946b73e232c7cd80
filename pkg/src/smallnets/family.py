from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from smallnets.geometry import as_point, coord_str, fraction_str


@dataclass(frozen=True)
class RangeFamily:
    kind: str  # "boxes" | "halfplanes" | "disks"
    dim: int = 2

    def __post_init__(self):
        if self.kind not in ("boxes", "halfplanes", "disks"):
            raise ValueError(f"unknown range family {self.kind!r}")
        if self.kind != "boxes" and self.dim != 2:
            raise ValueError(f"{self.kind} are planar only")
        if self.dim < 1:
            raise ValueError("dimension must be positive")

    @property
    def compact(self) -> bool:
        return self.kind != "halfplanes"

    def __str__(self):
        return f"boxes({self.dim})" if self.kind == "boxes" else self.kind


def Boxes(d: int = 2) -> RangeFamily:
    return RangeFamily("boxes", d)


HALFPLANES = RangeFamily("halfplanes")
DISKS = RangeFamily("disks")


def parse_family(name: str, dim: int = 2) -> RangeFamily:
    name = name.lower()
    if name in ("box", "boxes", "rect", "rects", "rectangles"):
        return Boxes(dim)
    if name in ("halfplane", "halfplanes", "halfspace", "halfspaces"):
        return HALFPLANES
    if name in ("disk", "disks"):
        return DISKS
    raise ValueError(f"unknown range family {name!r}")


@dataclass(frozen=True)
class Net:
    """A net for one range family.

    Strong nets hold point indices; weak nets hold explicit coordinates.
    ``note`` flags constructions run outside the hypotheses of their bound
    (their ``claimed_eps`` was measured by an oracle instead).
    """

    family: RangeFamily
    strong: bool
    members: tuple
    claimed_eps: Fraction
    note: str = ""
    info: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.strong:
            members = tuple(int(m) for m in self.members)
            if len(set(members)) != len(members):
                raise ValueError("strong net has duplicate members")
        else:
            members = tuple(as_point(m) for m in self.members)
        object.__setattr__(self, "members", members)
        eps = Fraction(self.claimed_eps)
        if not 0 <= eps <= 1:
            raise ValueError("claimed_eps must lie in [0, 1]")
        object.__setattr__(self, "claimed_eps", eps)

    @property
    def size(self) -> int:
        return len(self.members)

    def points(self, P) -> list:
        if self.strong:
            for m in self.members:
                if not 0 <= m < P.n:
                    raise IndexError(f"net member {m} is not an index into a {P.n}-point set")
            return [P.points[m] for m in self.members]
        return list(self.members)

    def to_dict(self) -> dict:
        d = {
            "family": self.family.kind,
            "dim": self.family.dim,
            "strong": self.strong,
            "members": list(self.members)
            if self.strong
            else [[coord_str(c) for c in p] for p in self.members],
            "claimed_eps": fraction_str(self.claimed_eps),
        }
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Net":
        fam = RangeFamily(d["family"], int(d.get("dim", 2)))
        return cls(fam, bool(d["strong"]), tuple(d["members"]), Fraction(d["claimed_eps"]), d.get("note", ""))
