"""XYZ product codes: construction, dimension, distance bounds and cyclic families."""

__version__ = "0.1.0"
