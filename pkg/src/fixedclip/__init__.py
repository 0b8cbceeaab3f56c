"""Polygon boolean operations with a deterministic en/ex rule for degenerate intersections."""
