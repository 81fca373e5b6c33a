"""Equirectangular grids of mu(e) and their CSV, h5 and PNG forms."""

import dataclasses
import io
from typing import Optional

import numpy as np

from .. import storage
from ..graph import SpatialGraph
from ..projection import mu_many
from ..utils import errors
from ..utils.sphere import lonlat_to_vector


@dataclasses.dataclass(frozen=True, eq=False)
class MuHeatmap:
    """mu(e) at the cell centres of a (resolution x 2*resolution) lon/lat grid.

    `lon` and `lat` are in radians; `mu_doubled[j, i]` is 2*mu at
    (lon[i], lat[j]); `generic[j, i]` is False where the direction is not
    generic, in which case the value is not meaningful.
    """

    name: str
    lon: np.ndarray
    lat: np.ndarray
    mu_doubled: np.ndarray
    generic: np.ndarray

    @property
    def values(self) -> np.ndarray:
        """mu as floats, NaN at non-generic cells."""
        return np.where(self.generic, self.mu_doubled / 2, np.nan)

    def minimum(self) -> float:
        return float(np.nanmin(self.values))

    def to_csv(self) -> str:
        """CSV with columns lon,lat,mu_doubled,generic; angles in degrees."""
        buffer = io.StringIO()
        buffer.write("lon,lat,mu_doubled,generic\n")
        lon_deg = np.degrees(self.lon)
        lat_deg = np.degrees(self.lat)
        for j, lat in enumerate(lat_deg):
            for i, lon in enumerate(lon_deg):
                buffer.write(
                    f"{lon:.6f},{lat:.6f},{int(self.mu_doubled[j, i])},"
                    f"{int(self.generic[j, i])}\n"
                )
        return buffer.getvalue()

    def save_h5(self, path: str) -> str:
        return storage.save_h5(
            path,
            name=self.name,
            lon=self.lon,
            lat=self.lat,
            mu_doubled=self.mu_doubled,
            generic=self.generic,
        )


def mu_heatmap(graph: SpatialGraph, resolution: int = 64) -> MuHeatmap:
    """Evaluate mu on the cell centres of an equirectangular grid.

    Non-generic cells are flagged rather than perturbed.

    Raises:
        BadParameters: if resolution < 8.
    """
    if resolution < 8:
        raise errors.BadParameters(f"Resolution should be >= 8, got {resolution}")
    step = np.pi / resolution
    lon = -np.pi + step * (np.arange(2 * resolution) + 0.5)
    lat = -np.pi / 2 + step * (np.arange(resolution) + 0.5)
    grid_lon, grid_lat = np.meshgrid(lon, lat)
    directions = lonlat_to_vector(grid_lon, grid_lat).reshape(-1, 3)
    values, generic = mu_many(graph, directions)
    shape = grid_lon.shape
    return MuHeatmap(graph.name, lon, lat, values.reshape(shape), generic.reshape(shape))


def plot_mu_heatmap(heatmap: MuHeatmap, path: Optional[str] = None):
    """Draw the heatmap with matplotlib and save it to `path` if given.

    matplotlib is an optional dependency (extra `all`).
    """
    try:
        from matplotlib.figure import Figure  # pylint: disable=C0415
    except ImportError as exc:
        raise ImportError(
            "Plotting needs matplotlib. Install it with `pip install curvegraph[all]`."
        ) from exc

    fig = Figure(figsize=(8, 4))
    ax = fig.add_subplot(1, 1, 1)
    image = ax.imshow(
        heatmap.values,
        origin="lower",
        extent=(-180, 180, -90, 90),
        aspect="auto",
        interpolation="nearest",
    )
    fig.colorbar(image, ax=ax, label="mu(e)")
    ax.set_xlabel("longitude (deg)")
    ax.set_ylabel("latitude (deg)")
    ax.set_title(heatmap.name or "mu(e)")
    if path is not None:
        fig.savefig(path, dpi=120, bbox_inches="tight")
    return fig
