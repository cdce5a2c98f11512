# Output rendering subpackage
