"""DriftBench - dataset drift workbench for object detection."""
