"""equilab: exact certificates and recognition for weighted star and
stable-set structure in graphs."""

__version__ = "0.1.0"
