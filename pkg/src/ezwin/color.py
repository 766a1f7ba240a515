"""The fixed eight-colour palette."""
from __future__ import annotations

import enum


class Color(enum.Enum):
    White = (255, 255, 255)
    Black = (0, 0, 0)
    Red = (255, 0, 0)
    Green = (0, 255, 0)
    Blue = (0, 0, 255)
    Yellow = (255, 255, 0)
    Cyan = (0, 255, 255)
    Magenta = (255, 0, 255)

    @property
    def rgb(self) -> tuple[int, int, int]:
        return self.value

    @classmethod
    def parse(cls, name: str) -> Color:
        """Look a colour up by name, case-insensitively."""
        for member in cls:
            if member.name.lower() == name.lower():
                return member
        raise ValueError(f"unknown colour {name!r}")
