FileInputStream input = new FileInputStream(tempPath);
try {
    input.read();
} catch (IOException e) {
}
