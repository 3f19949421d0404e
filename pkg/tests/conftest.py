"""Shared pytest fixtures for braidforms tests."""

import random
from collections.abc import Callable, Iterator
from pathlib import Path

import pytest

from braidforms.config import get_settings


@pytest.fixture
def front_file_factory(tmp_path: Path) -> Callable[[str, str], Path]:
    """Factory to create temp front files."""

    def create(name: str, content: str) -> Path:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path

    return create


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator for randomized property tests."""
    return random.Random(20240607)


@pytest.fixture
def fresh_settings() -> Iterator[None]:
    """Drop cached settings so BRAIDFORMS_* changes made by a test apply."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
