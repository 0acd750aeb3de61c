"""Test suite for dtBesselUmbral."""
