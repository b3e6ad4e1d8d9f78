"""Published reference values for the DIMACS benchmark subset.

``_PROPERTIES`` holds graph properties and best-known clique sizes; ``_RESULTS``
holds best-of-three results for the replicated FGA and the Monte Carlo
solver, mean chromosomes until the best was found, and the values Zhang et
al. reported. Both are copied as printed, including their inconsistencies
(see ``CONFLICTS``). Rows are joined on ``canonical_name``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType


@dataclass(frozen=True)
class PropertiesRow:
    printed_name: str
    vertices: int
    edges: int
    density: str
    best_known: int


@dataclass(frozen=True)
class ResultsRow:
    name: str
    nodes: int
    edges: int
    density: str
    fga_max: int
    fga_chromosomes: int
    mc_max: int
    mc_chromosomes: int
    zhang_max: int
    best: int


@dataclass(frozen=True)
class ReferenceEntry:
    name: str
    properties: PropertiesRow | None
    results: ResultsRow | None

    @property
    def best_known(self) -> int | None:
        if self.properties is not None:
            return self.properties.best_known
        return self.results.best if self.results else None

    @property
    def density(self) -> str | None:
        if self.properties is not None:
            return self.properties.density
        return self.results.density if self.results else None


def canonical_name(name: str) -> str:
    """Case- and separator-insensitive key: 'p_hat300-1', 'p-hat300-1' -> 'phat3001'."""
    base = re.sub(r"\.(clq|col|txt|dimacs)$", "", name.strip(), flags=re.I)
    return re.sub(r"[^0-9a-z]", "", base.lower())


# (figure-2 name, printed table-1 name, vertices, edges, density, LC known)
_PROPERTIES = [
    ("C125.9", "C125.9", 125, 6963, "0.898", 34),
    ("C250.9", "C250.9", 250, 27984, "0.899", 44),
    ("C500.9", "C500.9", 500, 112332, "0.900", 57),
    ("C1000.9", "C1000.9", 1000, 450079, "0.901", 68),
    ("C2000.9", "C2000.9", 2000, 1799532, "0.900", 80),
    ("C2000.5", "C2000.5", 2000, 999836, "0.500", 16),
    ("C4000.5", "C4000.5", 4000, 4000268, "0.500", 18),
    ("DSJC500_5", "DSJC500", 500, 125248, "0.502", 13),
    ("DSJC1000_5", "DSJC1000", 1000, 499652, "0.500", 15),
    ("brock200_2", "brock200", 200, 9876, "0.496", 12),
    ("brock200_4", "brock200", 200, 13089, "0.658", 17),
    ("brock400_2", "brock400", 400, 59786, "0.749", 29),
    ("brock400_4", "brock400", 400, 59765, "0.749", 33),
    ("brock800_2", "brock800", 800, 208166, "0.651", 24),
    ("brock800_4", "brock800", 800, 207643, "0.650", 26),
    ("gen200_p0.9_44", "gen200p0.9", 200, 17910, "0.900", 44),
    ("gen200_p0.9_55", "gen200p0.9", 200, 17910, "0.900", 55),
    ("gen400_p0.9_55", "gen400p0.9", 400, 71820, "0.900", 55),
    ("gen400_p0.9_65", "gen400p0.9", 400, 71820, "0.900", 65),
    ("gen400_p0.9_75", "gen400p0.9", 400, 71820, "0.900", 75),
    ("hamming8-4", "hamming8-4", 256, 20864, "0.639", 16),
    ("hamming10-4", "hamming10-4", 1024, 434176, "0.829", 40),
    ("keller4", "keller4", 171, 9435, "0.649", 11),
    ("keller5", "keller5", 776, 225990, "0.752", 27),
    ("keller6", "keller6", 3361, 4619898, "0.818", 59),
    ("p_hat300-1", "p-hat300-1", 300, 10933, "0.244", 8),
    ("p_hat300-2", "p-hat300-2", 300, 21928, "0.489", 25),
    ("p_hat300-3", "p-hat300-3", 300, 33390, "0.744", 36),
    ("p_hat700-1", "p-hat700-1", 700, 60999, "0.249", 11),
    ("p_hat700-2", "p-hat700-2", 700, 121728, "0.498", 44),
    ("p_hat700-3", "p-hat700-3", 700, 183010, "0.748", 62),
    ("p_hat1500-1", "p-hat1500-1", 1500, 284923, "0.253", 12),
    ("p_hat1500-2", "p-hat1500-2", 1500, 568960, "0.506", 65),
    ("p_hat1500-3", "p-hat1500-3", 1500, 847244, "0.754", 94),
]

_RESULTS = [
    ("C125.9", 125, 6963, "0.898", 34, 113, 34, 46, 34, 34),
    ("C250.9", 250, 27984, "0.899", 44, 8867, 44, 1595, 44, 44),
    ("C500.9", 500, 112332, "0.9", 57, 147458, 57, 36020, 56, 57),
    ("C1000.9", 1000, 450079, "0.901", 67, 379135, 66, 143089, 65, 68),
    ("C2000.9", 2000, 1799532, "0.9", 75, 238288, 74, 27355, 74, 80),
    ("DSJC500_5", 500, 125248, "0.502", 15, 121015, 15, 851, 15, 15),
    ("DSJC1000_5", 1000, 499652, "0.5", 13, 7630, 13, 93, 13, 13),
    ("C2000.5", 2000, 999836, "0.5", 16, 74217, 16, 3502, 16, 16),
    ("C4000.5", 4000, 4000268, "0.5", 17, 110605, 17, 6125, 17, 18),
    ("brock200_2", 200, 9876, "0.496", 12, 174045, 12, 575, 12, 12),
    ("brock200_4", 200, 13089, "0.658", 16, 1668, 17, 6510, 16, 17),
    ("brock400_2", 400, 59786, "0.749", 25, 81173, 29, 11579, 25, 29),
    ("brock400_4", 400, 59765, "0.749", 25, 23050, 33, 2171, 25, 33),
    ("brock800_2", 800, 208166, "0.651", 21, 125993, 21, 9114, 21, 24),
    ("brock800_4", 800, 207643, "0.65", 21, 266016, 21, 10965, 20, 26),
    ("gen200_p0.9_44", 200, 17910, "0.9", 44, 14435, 44, 4899, 44, 44),
    ("gen200_p0.9_55", 200, 17910, "0.9", 55, 738, 55, 189, 55, 55),
    ("gen400_p0.9_55", 400, 71820, "0.9", 52, 89909, 53, 151776, 55, 55),
    ("gen400_p0.9_65", 400, 71820, "0.9", 65, 21141, 64, 29631, 65, 65),
    ("gen400_p0.9_75", 400, 71820, "0.9", 75, 5646, 75, 885, 75, 75),
    ("hamming8-4", 256, 20864, "0.639", 40, 14080, 40, 861, 40, 40),
    ("hamming10-4", 1024, 434176, "0.829", 16, 3, 16, 1, 16, 16),
    ("keller4", 171, 9435, "0.649", 11, 124, 11, 2, 11, 11),
    ("keller5", 776, 225990, "0.752", 27, 28081, 27, 64, 27, 27),
    ("keller6", 3361, 4619898, "0.818", 55, 232600, 56, 15958, 57, 59),
    ("p_hat300-1", 300, 10933, "0.244", 8, 164, 8, 140, 8, 8),
    ("p_hat300-2", 300, 21928, "0.489", 25, 109, 25, 82, 25, 25),
    ("p_hat300-3", 300, 33390, "0.744", 36, 602, 36, 2201, 36, 36),
    ("p_hat700-1", 700, 60999, "0.249", 11, 710, 11, 5236, 11, 11),
    ("p_hat700-2", 700, 121728, "0.498", 44, 258, 44, 2468, 44, 44),
    ("p_hat700-3", 700, 183010, "0.748", 62, 2589, 62, 492, 62, 62),
    ("p_hat1500-1", 1500, 284923, "0.253", 11, 784, 12, 1778, 11, 12),
    ("p_hat1500-2", 1500, 568960, "0.506", 65, 576, 65, 25330, 65, 65),
    ("p_hat1500-3", 1500, 847244, "0.754", 94, 11399, 94, 8707, 94, 94),
]

AVERAGE_CHROMOSOMES = MappingProxyType({"fga": 64212, "mc": 15009})

# Rows where the two published tables disagree on clique sizes; the values
# look swapped between the paired graphs.
CONFLICTS = MappingProxyType(
    {
        "hamming84": "properties best-known 16, results max 40 (swapped with hamming10-4)",
        "hamming104": "properties best-known 40, results max 16 (swapped with hamming8-4)",
        "dsjc5005": "properties best-known 13, results max 15 (swapped with DSJC1000_5)",
        "dsjc10005": "properties best-known 15, results max 13 (swapped with DSJC500_5)",
    }
)

# Published edge counts for the DSJC rows are the declared line count, which
# lists every edge in both orientations.
DECLARED_EDGE_COUNTS = frozenset({"dsjc5005", "dsjc10005"})


def _build() -> MappingProxyType:
    entries = {}
    fig = {canonical_name(r[0]): ResultsRow(*r) for r in _RESULTS}
    for name, printed, n, m, dens, best in _PROPERTIES:
        key = canonical_name(name)
        entries[key] = ReferenceEntry(name, PropertiesRow(printed, n, m, dens, best), fig.get(key))
    for key, row in fig.items():
        entries.setdefault(key, ReferenceEntry(row.name, None, row))
    return MappingProxyType(entries)


REFERENCE = _build()


def lookup(name: str) -> ReferenceEntry | None:
    return REFERENCE.get(canonical_name(name))
