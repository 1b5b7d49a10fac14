# Source package initializer

