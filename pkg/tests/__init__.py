# Test package initializer

