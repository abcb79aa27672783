"""Distance-r dominating set reconfiguration under token sliding and token jumping."""

__version__ = "0.1.0"
