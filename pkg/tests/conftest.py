import pytest
from hypothesis import settings

from glchar import hall_green

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session", autouse=True)
def isolated_cache(tmp_path_factory):
    """Every test session computes Hall polynomials into its own cache directory."""
    path = tmp_path_factory.mktemp("glchar-cache")
    mp = pytest.MonkeyPatch()
    mp.setenv(hall_green.CACHE_ENV, str(path))
    hall_green.set_cache_dir(None)
    yield path
    hall_green.flush_cache()
    mp.undo()
