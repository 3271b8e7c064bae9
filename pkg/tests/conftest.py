import pytest

from ppshift import build_field

_CACHE = {}


@pytest.fixture(scope="session")
def field():
    """Shared field factory; contexts are immutable so caching is safe."""

    def get(p, n=1):
        key = (p, n)
        if key not in _CACHE:
            _CACHE[key] = build_field(p, n)
        return _CACHE[key]

    return get
