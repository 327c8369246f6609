"""Library modules for sptlab: series engine, statistics, checks and CLI support."""
