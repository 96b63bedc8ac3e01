import pytest

from rswe import backend

BACKENDS = ["python"] + (["compiled"] if backend.HAVE_COMPILED else [])


@pytest.fixture(params=BACKENDS)
def kernels(request):
    """Run the test once per available kernel backend."""
    with backend.using(request.param):
        yield request.param
