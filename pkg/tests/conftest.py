import pytest

from schurdiv import schur_number


@pytest.fixture(scope="session")
def restricted_two_colors():
    """Exact restricted search result for 2 colors, shared across modules."""
    result = schur_number(2, restricted=True)
    assert result.status == "exact"
    return result
