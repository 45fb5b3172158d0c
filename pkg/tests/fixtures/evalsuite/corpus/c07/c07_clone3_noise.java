ObjectInputStream stream = new ObjectInputStream(replicaC);
try {
    Object payload = stream.readObject();
    accept(payload);
} catch (IOException e) { }
