# Core algorithms package
