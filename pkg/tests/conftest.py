import pytest

import doubleslit as ds


@pytest.fixture(scope="session")
def paper_config():
    """Reference constants: N=2000, corrected geometry."""
    return ds.ExperimentConfig()


@pytest.fixture(scope="session")
def paper_derived(paper_config):
    return ds.derive(paper_config)


@pytest.fixture(scope="session")
def profiles_2000(paper_config):
    """Intensity profiles for all three behaviors at the reference N."""
    return ds.simulate_all(paper_config)


@pytest.fixture(scope="session")
def config_250():
    return ds.ExperimentConfig(n_positions=250)


@pytest.fixture(scope="session")
def profiles_250(config_250):
    return ds.simulate_all(config_250)
