import pytest

from edgeszeged import kernels

ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {criterion}" + (f"  [{detail}]" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section(f"acceptance criteria ({kernels.BACKEND} kernels)")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=["python", "cython"])
def backend(request):
    """Each kernel module in turn; the compiled one is skipped when not built."""
    from edgeszeged import _kernels_py

    if request.param == "python":
        return _kernels_py
    mod = kernels.compiled_module()
    if mod is None:
        pytest.skip("compiled kernels not built")
    return mod
