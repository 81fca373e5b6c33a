# flake8: noqa: F401
from .heatmap import MuHeatmap, mu_heatmap, plot_mu_heatmap
from .quadrature import SCHEMES, QuadratureResult, crofton_ntc, lattice_directions
