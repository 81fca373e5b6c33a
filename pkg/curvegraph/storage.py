"""Store numeric results in h5 files."""

from typing import Any

import numpy as np
from dh5 import DH5

from .logger import logger


def save_h5(path: str, /, **data: Any) -> str:
    """Save arrays and scalars to a new h5 file at `path`.

    Examples:
        >>> save_h5("heatmap.h5", lon=lon, lat=lat, mu_doubled=grid)
    """
    path = path if path.endswith(".h5") else path + ".h5"
    converted = {
        key: (np.asarray(value) if isinstance(value, (list, tuple)) else value)
        for key, value in data.items()
    }
    DH5(path, "w").update(**converted).save()
    logger.info("Saved %s to %s", sorted(converted), path)
    return path
