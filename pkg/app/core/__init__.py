"""Core settings, exceptions, seeded PRNG and the example class table."""
