"""
Dataset profiles and framework presets.

Profiles carry the node/edge counts of the public recommendation datasets and
their tuned γ, so synthetic stand-ins can be generated at matching scale.
Presets name the weighting choices that turn the framework into plain label
propagation, modularity or CPM optimization.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

from coclust_api.errors import InvalidInputError
from coclust_api.weighting.schemes import SchemeName


@dataclass(frozen=True)
class DatasetProfile:
    name: str
    n_users: int
    n_items: int
    n_interactions: int
    gamma: float

    @property
    def density(self) -> float:
        return self.n_interactions / (self.n_users * self.n_items)


PROFILES: Dict[str, DatasetProfile] = {
    "beauty": DatasetProfile("beauty", 22_363, 12_101, 198_502, 0.13),
    "gowalla": DatasetProfile("gowalla", 29_858, 40_981, 1_027_370, 7.57),
    "yelp2018": DatasetProfile("yelp2018", 31_668, 38_048, 1_561_406, 5.50),
    "amazonbook": DatasetProfile("amazonbook", 52_643, 91_599, 2_984_108, 4.73),
}


def get_profile(name: str) -> DatasetProfile:
    try:
        return PROFILES[name.lower()]
    except KeyError:
        raise InvalidInputError(f"unknown dataset profile {name!r}; choose from {sorted(PROFILES)}") from None


class FrameworkPreset(str, Enum):
    BACO = "baco"
    LP = "lp"
    LPAB = "lpab"
    CPM = "cpm"
    REVERSE_HWS = "reverse-hws"


# preset -> (weighting scheme, whether gamma is forced to 0)
_PRESETS: Dict[FrameworkPreset, Tuple[SchemeName, bool]] = {
    FrameworkPreset.BACO: (SchemeName.HWS, False),
    FrameworkPreset.LP: (SchemeName.CPM_UNIT, True),
    FrameworkPreset.LPAB: (SchemeName.MODULARITY, False),
    FrameworkPreset.CPM: (SchemeName.CPM_UNIT, False),
    FrameworkPreset.REVERSE_HWS: (SchemeName.REVERSE_HWS, False),
}


def preset_scheme(preset: FrameworkPreset) -> Tuple[SchemeName, bool]:
    return _PRESETS[preset]
