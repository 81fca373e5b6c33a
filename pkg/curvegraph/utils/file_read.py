"""Read and write text files."""

import os

from .errors import GraphValidationError


def read_file(file: str, /) -> str:
    """Read the contents of a file and returns it as a string.

    Args:
        file (str): The path to the file to be read.

    Returns:
        str: The contents of the file as a string.

    Raises:
        GraphValidationError: If the file does not exist or is not a file.
    """
    if not os.path.isfile(file):
        raise GraphValidationError(
            "Cannot read a file if it doesn't exist or it's not a file. "
            f"Path: {os.path.abspath(file)}"
        )

    with open(file, "r", encoding="utf-8") as file_opened:
        return file_opened.read()


def write_file(file: str, content: str, /) -> str:
    """Write `content` to `file`, creating parent directories. Returns the path."""
    directory = os.path.dirname(os.path.abspath(file))
    os.makedirs(directory, exist_ok=True)
    with open(file, "w", encoding="utf-8", newline="\n") as file_opened:
        file_opened.write(content)
    return file
