"""Closed-form catalog of the 4k-3 second-minimal odd pattern families.

Every family is the minimal (Stefan) pattern of period 2k+1 with a small
local rearrangement of images.  Twelve families are parameter-free; the
eight IJ families additionally take a position parameter i with 2 < i < k
(so they exist only for k > 3) and write j = 2k - i.

Generating all instances produces deliberate overlaps: consecutive settings
of the insertion construction share patterns (IJ4 at i-1 coincides with IJ1
at i, IJ2 at i-1 with IJ11 at i, IJ13 at i-1 with IJ14 at i, IJ3 with IJ12
at equal i) and the chains terminate on the parameter-free families (IJ1 at
i=3 on S22-b, IJ11 at 3 on S22-a, IJ14 at 3 on S2-b, IJ4 at k-1 on Len2k-A,
IJ2 at k-1 on KK4, IJ13 at k-1 on KK2).  Deduplication by exact image
equality must therefore leave exactly 4k-3 patterns; the count is asserted,
never assumed.  At k=3 the chains collapse further (S22-b = Len2k-A,
S22-a = KK4, S2-b = KK2), which the same dedup absorbs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParamOutOfRange
from .pattern import Pattern, render, stefan

__all__ = [
    "FamilyTag",
    "FIXED_FAMILIES",
    "SETTING_FAMILIES",
    "family",
    "family_instances",
    "catalog",
    "catalog_members",
    "CatalogMember",
    "verify_sharing",
    "SharingCheck",
    "SharingReport",
]

FIXED_FAMILIES = (
    "Len2k-A", "Len2k-B",
    "S1-a", "S1-b", "S2-a", "S2-b", "S22-a", "S22-b",
    "KK1", "KK2", "KK3", "KK4",
)
SETTING_FAMILIES = ("IJ1", "IJ2", "IJ3", "IJ4", "IJ11", "IJ12", "IJ13", "IJ14")
_ORDER = {name: pos for pos, name in enumerate(FIXED_FAMILIES + SETTING_FAMILIES)}


@dataclass(frozen=True)
class FamilyTag:
    name: str
    i: int | None = None

    def __post_init__(self) -> None:
        if self.name not in _ORDER:
            raise ParamOutOfRange(f"unknown family {self.name!r}")

    def label(self) -> str:
        return self.name if self.i is None else f"{self.name}[i={self.i}]"

    def sort_key(self) -> tuple[int, int]:
        return _ORDER[self.name], self.i or 0


def _alterations(name: str, k: int, i: int | None) -> dict[int, int]:
    """Positions (1-based) whose image differs from the Stefan pattern."""
    if name == "Len2k-A":
        return {k - 1: k + 2, k: k + 4, k + 1: k + 3}
    if name == "Len2k-B":
        return {1: k, k: k + 2, k + 1: k + 3, k + 2: k + 1}
    if name == "S1-a":
        return {1: 2 * k + 1, 2: k + 1, 2 * k: 1, 2 * k + 1: 2}
    if name == "S1-b":
        return {1: 2 * k, 2: k + 1, 3: 2 * k + 1}
    if name == "S2-a":
        return {2: 2 * k, 3: 2 * k + 1, 2 * k: 1, 2 * k + 1: 2}
    if name == "S2-b":
        return {2 * k - 1: 2, 2 * k: 1, 2 * k + 1: 3}
    if name == "S22-a":
        return {2: 2 * k, 3: 2 * k + 1, 2 * k - 1: 2, 2 * k: 3, 2 * k + 1: 1}
    if name == "S22-b":
        return {2: 2 * k - 1, 3: 2 * k + 1, 4: 2 * k}
    if name == "KK1":
        return {k: k + 2, k + 1: k + 3, k + 2: k - 1, k + 3: k}
    if name == "KK2":
        return {k + 2: k - 1, k + 3: k - 2, k + 4: k}
    if name == "KK3":
        return {1: k, k + 2: k - 1, k + 3: k + 1}
    if name == "KK4":
        return {k - 1: k + 3, k: k + 4, k + 2: k - 1, k + 3: k}
    j = 2 * k - i
    if name == "IJ1":
        return {i - 1: j + 2, i: j + 4, i + 1: j + 3}
    if name == "IJ2":
        return {i: j + 2, i + 1: j + 3, j + 1: i, j + 2: i + 1}
    if name in ("IJ3", "IJ12"):  # literally identical displays
        return {i: j + 2, i + 1: j + 3, j + 2: i - 1, j + 3: i}
    if name == "IJ4":
        return {i: j + 1, i + 1: j + 3, i + 2: j + 2}
    if name == "IJ11":
        return {i - 1: j + 3, i: j + 4, j + 2: i - 1, j + 3: i}
    if name == "IJ13":
        return {j + 1: i, j + 2: i - 1, j + 3: i + 1}
    if name == "IJ14":
        return {j + 2: i - 1, j + 3: i - 2, j + 4: i}
    raise ParamOutOfRange(f"unknown family {name!r}")


def family(tag: FamilyTag, k: int) -> Pattern:
    """Instantiate one family at period 2k+1."""
    if k < 3:
        raise ParamOutOfRange(f"families need k >= 3, got {k}")
    if tag.name in FIXED_FAMILIES:
        if tag.i is not None:
            raise ParamOutOfRange(f"{tag.name} takes no position parameter")
    else:
        if k < 4:
            raise ParamOutOfRange(f"{tag.name} needs k > 3, got {k}")
        if tag.i is None or not 2 < tag.i < k:
            raise ParamOutOfRange(f"{tag.name} needs 2 < i < k, got i={tag.i}, k={k}")
    images = list(stefan(k).images)
    for pos, val in _alterations(tag.name, k, tag.i).items():
        images[pos - 1] = val
    return Pattern(tuple(images))


def family_instances(k: int) -> list[tuple[FamilyTag, Pattern]]:
    """All (tag, pattern) instances over the valid parameter ranges."""
    tags = [FamilyTag(name) for name in FIXED_FAMILIES]
    if k >= 4:
        tags += [FamilyTag(name, i) for name in SETTING_FAMILIES for i in range(3, k)]
    return [(tag, family(tag, k)) for tag in tags]


@dataclass(frozen=True)
class CatalogMember:
    pattern: Pattern
    tags: tuple[FamilyTag, ...]


def catalog_members(k: int) -> list[CatalogMember]:
    """Deduplicated catalog with every family tag that produces each pattern."""
    by_images: dict[tuple[int, ...], list[FamilyTag]] = {}
    for tag, pat in family_instances(k):
        by_images.setdefault(pat.images, []).append(tag)
    members = [
        CatalogMember(Pattern(images), tuple(sorted(tags, key=FamilyTag.sort_key)))
        for images, tags in sorted(by_images.items())
    ]
    if len(members) != 4 * k - 3:
        raise RuntimeError(
            f"catalog invariant violated: {len(members)} distinct patterns, expected {4 * k - 3}")
    return members


def catalog(k: int) -> list[Pattern]:
    """The 4k-3 distinct positive-type second-minimal patterns, sorted."""
    return [member.pattern for member in catalog_members(k)]


@dataclass(frozen=True)
class SharingCheck:
    description: str
    lhs: str
    rhs: str

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class SharingReport:
    k: int
    checks: tuple[SharingCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[SharingCheck]:
        return [c for c in self.checks if not c.ok]


def verify_sharing(k: int) -> SharingReport:
    """The literal sharing identities between neighboring settings.

    Substituting (i, j) -> (i-1, j+1) carries IJ4 onto IJ1, IJ2 onto IJ11 and
    IJ13 onto IJ14; IJ3 and IJ12 coincide at equal i; the chains close on the
    parameter-free families at i = 3 and i = k-1.
    """
    if k < 4:
        raise ParamOutOfRange(f"sharing identities need k >= 4, got {k}")

    def pat(name: str, i: int | None = None) -> str:
        return render(family(FamilyTag(name, i), k))

    checks = [SharingCheck("IJ1[i=3] == S22-b", pat("IJ1", 3), pat("S22-b"))]
    checks += [
        SharingCheck(f"IJ4[i={i - 1}] == IJ1[i={i}]", pat("IJ4", i - 1), pat("IJ1", i))
        for i in range(4, k)
    ]
    checks.append(SharingCheck(f"IJ4[i={k - 1}] == Len2k-A", pat("IJ4", k - 1), pat("Len2k-A")))
    checks += [
        SharingCheck(f"IJ3[i={i}] == IJ12[i={i}]", pat("IJ3", i), pat("IJ12", i))
        for i in range(3, k)
    ]
    checks.append(SharingCheck("IJ11[i=3] == S22-a", pat("IJ11", 3), pat("S22-a")))
    checks += [
        SharingCheck(f"IJ2[i={i - 1}] == IJ11[i={i}]", pat("IJ2", i - 1), pat("IJ11", i))
        for i in range(4, k)
    ]
    checks.append(SharingCheck(f"IJ2[i={k - 1}] == KK4", pat("IJ2", k - 1), pat("KK4")))
    checks.append(SharingCheck("IJ14[i=3] == S2-b", pat("IJ14", 3), pat("S2-b")))
    checks += [
        SharingCheck(f"IJ13[i={i - 1}] == IJ14[i={i}]", pat("IJ13", i - 1), pat("IJ14", i))
        for i in range(4, k)
    ]
    checks.append(SharingCheck(f"IJ13[i={k - 1}] == KK2", pat("IJ13", k - 1), pat("KK2")))
    return SharingReport(k, tuple(checks))
