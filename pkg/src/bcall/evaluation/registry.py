"""Cohesion index registry.

Indices register themselves with :func:`register_index` at import time;
``bcall.evaluation`` imports the built-in RICE and UNITY modules, so they are
available as soon as the package is.
"""

import logging

from bcall.evaluation.base import CohesionIndex

logger = logging.getLogger(__name__)


class IndexRegistry:
    """Index name to :class:`CohesionIndex` subclass."""

    _indices: dict[str, type[CohesionIndex]] = {}

    @classmethod
    def register(cls, name: str, index_class: type[CohesionIndex]):
        current = cls._indices.get(name)
        if current is not None and current is not index_class:
            raise ValueError(f"Cohesion index {name!r} is already registered to {current.__name__}")
        cls._indices[name] = index_class
        logger.debug(f"Registered cohesion index: {name}")

    @classmethod
    def get(cls, name: str, config: dict | None = None) -> CohesionIndex | None:
        """Instantiate an index, or None if the name is unknown."""
        index_class = cls._indices.get(name)
        return index_class(config=config) if index_class else None

    @classmethod
    def list_names(cls) -> list[str]:
        return sorted(cls._indices)


def register_index(name: str):
    """Class decorator adding a cohesion index to the registry.

    Usage:
        @register_index("my_index")
        class MyIndex(CohesionIndex):
            ...
    """

    def decorator(cls):
        IndexRegistry.register(name, cls)
        return cls

    return decorator
