import pytest

from mmp132.oracle import DistCache


@pytest.fixture(scope="session")
def dist_cache(tmp_path_factory) -> DistCache:
    """One disk cache shared by every oracle-driven test in the run."""
    return DistCache(tmp_path_factory.mktemp("tables"))
