import pytest

from hypchrom.augment import AugmentConfig, grow_pipeline, phase_augment
from hypchrom.geometry import build_g9


@pytest.fixture(scope="session")
def g9():
    return build_g9()


@pytest.fixture(scope="session")
def reference_cfg():
    return AugmentConfig.reference()


@pytest.fixture(scope="session")
def g28(g9, reference_cfg):
    return phase_augment(g9, 2, cfg=reference_cfg, phase_index=1)


@pytest.fixture(scope="session")
def g42(g28, reference_cfg):
    return phase_augment(g28, 3, cfg=reference_cfg, phase_index=2)


@pytest.fixture(scope="session")
def pipeline(g9, reference_cfg):
    """All phase outputs of the default growth schedule."""
    return grow_pipeline(g9, cfg=reference_cfg)
