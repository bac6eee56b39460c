"""Block output, crystal export and verification suites."""
