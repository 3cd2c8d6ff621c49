"""Normal forms, geodesics and spherical growth series for the groups
G(p_1, ..., p_n) = < x_1, ..., x_n | x_1^{p_1} = ... = x_n^{p_n} >."""

__version__ = "0.1.0"
