"""spectral calculus and cohomology engine for two-dimensional toroidal groups."""
