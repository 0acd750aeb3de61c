"""Unit tests for dtBesselUmbral."""
