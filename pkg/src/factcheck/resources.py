"""Access to data files bundled with the package."""

from importlib.resources import files
from pathlib import Path


def data_dir() -> Path:
    return Path(str(files("factcheck").joinpath("data")))


def data_path(*parts: str) -> Path:
    return data_dir().joinpath(*parts)
