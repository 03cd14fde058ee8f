# tests/conftest.py
import os
from pathlib import Path

import pytest

from pinclass.perm import Permutation, parse_permutation


@pytest.fixture(autouse=True)
def isolate_environment():
    """Run every test without PINCLASS_* overrides from the developer's shell."""
    original_env = os.environ.copy()
    for name in list(os.environ):
        if name.startswith("PINCLASS_"):
            del os.environ[name]

    yield

    os.environ.clear()
    os.environ.update(original_env)


def perm(text: str) -> Permutation:
    """Permutation from compact digits ("2413") or spaced text ("2 4 1 3")."""
    if " " in text:
        return parse_permutation(text)
    return Permutation(tuple(int(d) for d in text))


@pytest.fixture
def separable_basis() -> list[Permutation]:
    """Basis {2413, 3142}: no simple permutation of length >= 4 avoids it."""
    return [perm("2413"), perm("3142")]


@pytest.fixture
def write_basis(tmp_path: Path):
    """Write basis lines to a file and return its path."""

    def write(*lines: str, name: str = "basis.txt") -> Path:
        path = tmp_path / name
        path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
        return path

    return write
