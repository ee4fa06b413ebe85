"""Memristor spiking logic gate simulator - main source package."""
