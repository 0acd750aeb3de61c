"""Integration tests for dtBesselUmbral."""
