"""Edge-balanced index sets of graphs and graph products."""
__version__ = "0.1.0"
