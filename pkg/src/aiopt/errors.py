class ConfigError(ValueError):
    """Invalid or out-of-range configuration value."""
